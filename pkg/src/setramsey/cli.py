"""Command-line entry point: ``setramsey <subcommand> ...``.

Machine-readable results go to standard output (JSON or the file formats of
:mod:`setramsey.io`); short human summaries go to standard error. Failures
print a single JSON object ``{"error": kind, "message": ...}`` to standard
output and exit with a code that identifies the kind.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import __version__, bounds, io
from .codes import code_partitions, code_to_coloring, coloring_to_code, greedy_gv_code, gv_lower_bound, partition_color_classes
from .coloring import find_mono_clique, is_witness, trim_to_exact
from .constructions import AffineParams, affine_partition_family, partitions_to_coloring, pentagon_coloring, product_coloring, random_coloring
from .errors import BudgetExceeded, FormatError, ResourceLimitError, StrategyError
from .solver import solve_exact
from .process import check_trace, extract_clique_process
from .stepup import step_up_3_to_4, step_up_graph_to_3, step_up_k
from .table import TABLE_VERSION, bound_table

EXIT_OK = 0
EXIT_WITNESS = 1  # verify found a monochromatic clique
EXIT_USAGE = 2
EXIT_FORMAT = 3
EXIT_BUDGET = 4
EXIT_RESOURCE = 5
EXIT_INVALID = 6


class UsageError(ValueError):
    pass


# first match wins; StrategyError falls under "invalid"
ERROR_KINDS = (
    ("usage", UsageError, EXIT_USAGE),
    ("format", FormatError, EXIT_FORMAT),
    ("budget", BudgetExceeded, EXIT_BUDGET),
    ("resource", ResourceLimitError, EXIT_RESOURCE),
    ("invalid", ValueError, EXIT_INVALID),
)


def _emit(obj: Any) -> None:
    print(json.dumps(obj, separators=(", ", ": ")))


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _key_values(items: Sequence[str], keys: Sequence[str]) -> dict[str, int]:
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or key not in keys:
            raise UsageError(f"expected {'/'.join(k + '=..' for k in keys)}, got {item!r}")
        try:
            out[key] = int(value)
        except ValueError:
            raise UsageError(f"{key} must be an integer, got {value!r}") from None
    missing = [k for k in keys if k not in out]
    if missing:
        raise UsageError(f"missing {', '.join(missing)}")
    return out


def _construct(args) -> int:
    if args.affine is not None:
        kv = _key_values(args.affine, ("q", "d", "k"))
        p = AffineParams(kv["q"], kv["d"], kv["k"])
        pf = affine_partition_family(p)
        c = partitions_to_coloring(pf)
        if args.partitions:
            _write_text(args.partitions, io.dumps_partitions(pf))
        _note(f"affine coloring: K_{p.N}, r={p.r}, s={p.s}, no monochromatic K_{p.n}")
    elif args.pentagon:
        c = pentagon_coloring()
        _note("pentagon coloring of K_5 with 2 colors")
    elif args.gv is not None:
        kv = _key_values(args.gv, ("q", "m", "d"))
        code = greedy_gv_code(kv["q"], kv["m"], kv["d"])
        _write_text(args.out, io.dumps_code(code))
        _note(f"greedy code: {len(code)} words, lower bound {gv_lower_bound(kv['q'], kv['m'], kv['d'])}")
        return EXIT_OK
    elif args.product:
        base = io.loads_coloring(_read_text(args.base)) if args.base else pentagon_coloring()
        if args.code:
            code = io.loads_code(_read_text(args.code))
        elif args.m is not None and args.d is not None:
            code = greedy_gv_code(base.num_vertices, args.m, args.d)
        else:
            raise UsageError("--product needs --code FILE or both --m and --d")
        c = product_coloring(base, code)
        if args.trim:
            c = trim_to_exact(c)
        _note(f"product coloring: K_{c.num_vertices}, r={c.num_colors}, s={c.colors_per_edge}")
    elif args.step_up:
        if not args.base:
            raise UsageError("--step-up needs --base FILE")
        base = io.loads_coloring(_read_text(args.base))
        if base.uniformity == 2:
            c = step_up_graph_to_3(base, vertex_limit=args.vertex_limit)
        elif base.uniformity == 3 and args.scheme == "3-to-4":
            c = step_up_3_to_4(base, vertex_limit=args.vertex_limit)
        else:
            c = step_up_k(base, vertex_limit=args.vertex_limit)
        _note(f"stepped-up coloring: {c.uniformity}-uniform on {c.num_vertices} vertices")
    elif args.random:
        if None in (args.N, args.r, args.s):
            raise UsageError("--random needs --N, --r and --s")
        c = random_coloring(args.N, args.r, args.s, seed=args.seed, uniformity=args.k)
        _note(f"random coloring: seed {args.seed}")
    else:
        raise UsageError("choose one construction")
    _write_text(args.out, io.dumps_coloring(c))
    return EXIT_OK


def _verify(args) -> int:
    c = io.loads_coloring(_read_text(args.file))
    if args.process:
        state = extract_clique_process(c, args.n, budget=args.budget)
        out = state.to_json()
        out["problems"] = check_trace(state, c, args.n)
        _emit(out)
        if state.witness is not None:
            return EXIT_WITNESS
        return EXIT_OK
    w = find_mono_clique(c, args.n, budget=args.budget, threads=args.threads)
    if w is None:
        _emit({"witness": None, "n": args.n})
        _note(f"no monochromatic K_{args.n}")
        return EXIT_OK
    assert is_witness(c, w)
    _emit({"witness": {"vertices": list(w.vertices), "color": w.color}, "n": args.n})
    _note(f"monochromatic K_{args.n} in color {w.color}: {list(w.vertices)}")
    return EXIT_WITNESS


def _solve(args) -> int:
    res = solve_exact(args.n, args.r, args.s, args.max_N, args.budget, use_turan=not args.exhaustive)
    if args.witness and res.witness is not None:
        _write_text(args.witness, io.dumps_coloring(res.witness))
    _emit(res.to_json())
    shown = res.value if res.value is not None else f">= {res.lower}"
    _note(f"R({args.n};{args.r},{args.s}) {shown} [{res.status}]")
    return EXIT_OK


FORMULAS = ("simple_upper", "upper_s_large", "first_moment_lower", "first_moment_exponential",
            "turan_upper", "hypergraph_upper", "lower_bound_plan", "all")


def _bound(args) -> int:
    n, r, s = args.n, args.r, args.s
    if args.formula == "all":
        reports = bounds.formula_lower_bounds(n, r, s) + bounds.upper_bounds(n, r, s)
        for rep in reports:
            _emit(rep.to_json())
        return EXIT_OK
    if args.formula == "lower_bound_plan":
        _emit(bounds.lower_bound_plan(n, r, s).to_json())
        return EXIT_OK
    if args.formula == "hypergraph_upper":
        if args.base_value is None:
            raise UsageError("hypergraph_upper needs --base-value")
        rep = bounds.hypergraph_upper(n, args.k, r, s, args.base_value, digit_budget=args.digits)
    elif args.formula == "upper_s_large":
        rep = bounds.upper_s_large(n, r, s, digit_budget=args.digits)
    else:
        rep = getattr(bounds, args.formula)(n, r, s)
    _emit(rep.to_json())
    return EXIT_OK


def _int_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        return range(int(lo), int(hi if sep else lo) + 1)
    except ValueError:
        raise UsageError(f"expected A..B or A, got {text!r}") from None


def _table(args) -> int:
    _emit({"table_version": TABLE_VERSION, "package_version": __version__,
           "n": [args.n.start, args.n.stop - 1], "r": [args.r.start, args.r.stop - 1]})
    for row in bound_table(args.n, args.r):
        _emit(row)
    return EXIT_OK


def _convert(args) -> int:
    text = _read_text(args.input)
    if args.to == "code":
        c = io.loads_coloring(text)
        parts = args.parts
        pf = partition_color_classes(c, parts, budget=args.budget)
        if pf is None:
            raise StrategyError(f"some color class needs more than {parts} parts")
        _write_text(args.output, io.dumps_code(coloring_to_code(c, pf)))
    else:
        code = io.loads_code(text)
        c = code_to_coloring(code)
        _write_text(args.output, io.dumps_coloring(c))
        if args.partitions:
            _write_text(args.partitions, io.dumps_partitions(code_partitions(code)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="setramsey", description="Set-coloring Ramsey numbers toolkit.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a coloring or code")
    kind = c.add_mutually_exclusive_group(required=True)
    kind.add_argument("--affine", nargs=3, metavar="KEY=VALUE", help="q=.. d=.. k=..")
    kind.add_argument("--pentagon", action="store_true")
    kind.add_argument("--product", action="store_true")
    kind.add_argument("--step-up", action="store_true")
    kind.add_argument("--random", action="store_true")
    kind.add_argument("--gv", nargs=3, metavar="KEY=VALUE", help="greedy code q=.. m=.. d=..")
    c.add_argument("--base", help="base coloring file (product, step-up)")
    c.add_argument("--code", help="code file (product)")
    c.add_argument("--m", type=int)
    c.add_argument("--d", type=int)
    c.add_argument("--trim", action="store_true", help="trim the product to exactly s colors per edge")
    c.add_argument("--scheme", choices=("k", "3-to-4"), default="3-to-4")
    c.add_argument("--vertex-limit", type=int, default=128)
    c.add_argument("--N", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--s", type=int)
    c.add_argument("--k", type=int, default=2)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--out", help="output file (default: standard output)")
    c.add_argument("--partitions", help="write the partition family JSON here (affine)")
    c.set_defaults(func=_construct)

    v = sub.add_parser("verify", help="look for a monochromatic clique")
    v.add_argument("file")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--threads", type=int, default=1)
    v.add_argument("--budget", type=int, default=50_000_000)
    v.add_argument("--process", action="store_true", help="run the on/off color process instead")
    v.set_defaults(func=_verify)

    s = sub.add_parser("solve", help="exact small R(n; r, s)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--s", type=int, required=True)
    s.add_argument("--max-N", type=int, default=12)
    s.add_argument("--budget", type=int, default=2_000_000)
    s.add_argument("--exhaustive", action="store_true", help="settle the upper side by search only")
    s.add_argument("--witness", help="write the lower witness coloring here")
    s.set_defaults(func=_solve)

    b = sub.add_parser("bound", help="evaluate a bound formula")
    b.add_argument("formula", nargs="?", choices=FORMULAS, default="all")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--r", type=int, required=True)
    b.add_argument("--s", type=int, required=True)
    b.add_argument("--k", type=int, default=3)
    b.add_argument("--base-value", type=int)
    b.add_argument("--digits", type=int, default=bounds.DEFAULT_DIGIT_BUDGET)
    b.set_defaults(func=_bound)

    t = sub.add_parser("table", help="best known bounds over a grid")
    t.add_argument("--n", type=_int_range, default=range(3, 6))
    t.add_argument("--r", type=_int_range, default=range(2, 11))
    t.set_defaults(func=_table)

    x = sub.add_parser("convert", help="translate between colorings and codes")
    x.add_argument("input")
    x.add_argument("output", nargs="?")
    x.add_argument("--to", choices=("code", "coloring"), required=True)
    x.add_argument("--parts", type=int, default=2, help="parts per color class (n - 1)")
    x.add_argument("--partitions", help="write the coordinate partitions here (to coloring)")
    x.add_argument("--budget", type=int, default=1_000_000)
    x.set_defaults(func=_convert)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        _emit({"error": "usage", "message": str(exc)})
        return EXIT_USAGE
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
        if code:
            _emit({"error": "usage", "message": "invalid command line"})
        return code
    try:
        return args.func(args)
    except Exception as exc:
        for kind, cls, code in ERROR_KINDS:
            if isinstance(exc, cls):
                _emit({"error": kind, "message": str(exc)})
                return code
        raise


if __name__ == "__main__":
    sys.exit(main())
