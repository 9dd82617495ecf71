"""Text formats for colorings, codes and partition families.

Coloring files are JSON lines: a header
``{"format_version": 1, "k": .., "N": .., "r": .., "s": .., "slack": ..}``
followed by one ``{"v": [...], "c": [...]}`` line per edge in colex order.
Code files start with a JSON header ``{"q": .., "m": .., "d": ..}`` and
list one word per line as space-separated symbols. Writers are
deterministic, so reading and re-writing reproduces a file byte for byte.
"""
from __future__ import annotations

import json
from math import comb
from typing import Any, TextIO

from .codes import Code, PartitionFamily, close_pair
from .coloring import SetColoring, colex_subsets, colors_of, mask_of, validate
from .errors import FormatError

FORMAT_VERSION = 1


def _dump(obj: Any) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def coloring_lines(c: SetColoring):
    yield _dump({"format_version": FORMAT_VERSION, "k": c.uniformity, "N": c.num_vertices,
                 "r": c.num_colors, "s": c.colors_per_edge, "slack": c.slack})
    for edge, m in c.items():
        yield _dump({"v": list(edge), "c": list(colors_of(m))})


def dumps_coloring(c: SetColoring) -> str:
    return "\n".join(coloring_lines(c)) + "\n"


def write_coloring(c: SetColoring, fh: TextIO) -> None:
    for line in coloring_lines(c):
        fh.write(line + "\n")


def _int(obj: dict, key: str, where: str) -> int:
    x = obj.get(key)
    if not isinstance(x, int) or isinstance(x, bool):
        raise FormatError(f"{where}: field {key!r} must be an integer")
    return x


def _parse(line: str, lineno: int) -> Any:
    try:
        return json.loads(line)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {lineno}: invalid JSON ({exc.msg})") from None


def loads_coloring(text: str) -> SetColoring:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty coloring file")
    head = _parse(lines[0], 1)
    if not isinstance(head, dict):
        raise FormatError("line 1: header must be a JSON object")
    if head.get("format_version") != FORMAT_VERSION:
        raise FormatError(f"unsupported format_version {head.get('format_version')!r}")
    k, N, r, s = (_int(head, key, "header") for key in ("k", "N", "r", "s"))
    slack = head.get("slack")
    if not isinstance(slack, bool):
        raise FormatError("header: field 'slack' must be true or false")
    if k < 2 or N < k:
        raise FormatError(f"header: need 2 <= k <= N, got k={k}, N={N}")
    expected = comb(N, k)
    if len(lines) - 1 != expected:
        raise FormatError(f"expected {expected} edge lines, found {len(lines) - 1}")
    masks = []
    for lineno, (line, edge) in enumerate(zip(lines[1:], colex_subsets(N, k)), start=2):
        rec = _parse(line, lineno)
        if not isinstance(rec, dict) or set(rec) != {"v", "c"}:
            raise FormatError(f"line {lineno}: edge record needs exactly the keys 'v' and 'c'")
        if rec["v"] != list(edge):
            raise FormatError(f"line {lineno}: expected edge {list(edge)} in colex order, got {rec['v']}")
        cs = rec["c"]
        if not isinstance(cs, list) or any(not isinstance(x, int) or isinstance(x, bool) for x in cs):
            raise FormatError(f"line {lineno}: colors must be a list of integers")
        if cs != sorted(set(cs)):
            raise FormatError(f"line {lineno}: colors must be sorted and distinct")
        if any(x < 0 for x in cs):
            raise FormatError(f"line {lineno}: negative color")
        masks.append(mask_of(cs))
    try:
        c = SetColoring(k, N, r, s, tuple(masks), slack)
    except ValueError as exc:
        raise FormatError(f"header: {exc}") from None
    report = validate(c)
    if not report.ok:
        edge, why = report.violations[0]
        raise FormatError(f"edge {list(edge)}: {why}")
    return c


def read_coloring(fh: TextIO) -> SetColoring:
    return loads_coloring(fh.read())


def dumps_code(code: Code) -> str:
    head = _dump({"q": code.alphabet_size, "m": code.length, "d": code.claimed_distance})
    return "\n".join([head] + [" ".join(map(str, w)) for w in code.words]) + "\n"


def loads_code(text: str) -> Code:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty code file")
    head = _parse(lines[0], 1)
    if not isinstance(head, dict):
        raise FormatError("line 1: header must be a JSON object")
    q, m, d = (_int(head, key, "header") for key in ("q", "m", "d"))
    words = []
    for lineno, line in enumerate(lines[1:], start=2):
        try:
            words.append(tuple(int(x) for x in line.split()))
        except ValueError:
            raise FormatError(f"line {lineno}: words are space-separated integers") from None
    try:
        code = Code(q, m, d, tuple(words))
    except ValueError as exc:
        raise FormatError(str(exc)) from None
    bad = close_pair(code)
    if bad is not None:
        raise FormatError(f"words {bad[0]} and {bad[1]} are closer than the claimed distance {d}")
    return code


def partitions_to_json(pf: PartitionFamily) -> dict[str, Any]:
    return {"num_vertices": pf.num_vertices, "num_partitions": pf.num_partitions,
            "parts_per_partition": pf.parts_per_partition, "assignment": [list(row) for row in pf.assignment]}


def dumps_partitions(pf: PartitionFamily) -> str:
    return _dump(partitions_to_json(pf)) + "\n"


def loads_partitions(text: str) -> PartitionFamily:
    obj = _parse(text, 1)
    if not isinstance(obj, dict):
        raise FormatError("partition file must hold a JSON object")
    try:
        return PartitionFamily(
            _int(obj, "num_vertices", "partitions"), _int(obj, "num_partitions", "partitions"),
            _int(obj, "parts_per_partition", "partitions"), tuple(tuple(row) for row in obj["assignment"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"partitions: {exc}") from None
