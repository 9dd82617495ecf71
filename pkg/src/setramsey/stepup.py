"""Stepping-up: lift a k-uniform coloring on N vertices to a (k+1)-uniform one on 2^N.

Output vertices are the integers 0..2^N-1. For u != v, ``delta(u, v)`` is the
most significant bit where they differ. For u < v < w the values
delta(u, v) and delta(v, w) are distinct, and along a chain v_1 < ... < v_t
delta(v_1, v_t) is the maximum of the consecutive deltas. A (k+1)-tuple
v_1 < ... < v_{k+1} is colored according to its consecutive delta sequence.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

import numpy as np
from numba import njit

from .coloring import SetColoring, colex_subsets, mask_of

# outputs larger than this many vertices are refused
DEFAULT_VERTEX_LIMIT = 1 << 7


def delta(u: int, v: int) -> int:
    if u == v:
        raise ValueError("delta needs distinct vertices")
    return (u ^ v).bit_length() - 1


def deltas(vertices: Sequence[int]) -> tuple[int, ...]:
    return tuple(delta(a, b) for a, b in zip(vertices, vertices[1:]))


def is_monotone(seq: Sequence[int]) -> bool:
    pairs = list(zip(seq, seq[1:]))
    return all(a < b for a, b in pairs) or all(a > b for a, b in pairs)


@dataclass(frozen=True)
class StepUpTrace:
    vertices: tuple[int, ...]
    deltas: tuple[int, ...]
    label: str


def first_turn(seq: Sequence[int]) -> str | None:
    """'local-max' or 'local-min' for the first non-monotone consecutive triple."""
    for a, b, c in zip(seq, seq[1:], seq[2:]):
        if a < b > c:
            return "local-max"
        if a > b < c:
            return "local-min"
    return None


def label_graph_to_3(ds: Sequence[int]) -> str:
    return "increasing" if ds[0] < ds[1] else "decreasing"


def label_k(ds: Sequence[int]) -> str:
    return "monotone" if is_monotone(ds) else first_turn(ds)


def label_3_to_4(ds: Sequence[int]) -> str:
    d1, d2, d3 = ds
    if is_monotone(ds):
        return "monotone"
    if d2 > d1 and d2 > d3:
        return "C"
    if d3 > d1 > d2:
        return "A"
    if d1 > d3 > d2:
        return "B"
    raise ValueError(f"delta sequence {tuple(ds)} has a tie")


def trace(vertices: Sequence[int], scheme: str) -> StepUpTrace:
    """Delta sequence and case label of one output edge under ``scheme``
    ('graph-to-3', 'k' or '3-to-4')."""
    vs = tuple(sorted(vertices))
    ds = deltas(vs)
    labeler = {"graph-to-3": label_graph_to_3, "k": label_k, "3-to-4": label_3_to_4}[scheme]
    return StepUpTrace(vs, ds, labeler(ds))


def _check_size(base: SetColoring, limit: int) -> int:
    size = 1 << base.num_vertices
    if size > limit:
        raise ValueError(f"stepped-up coloring would have {size} vertices, limit is {limit}")
    return size


def step_up_graph_to_3(base: SetColoring, *, vertex_limit: int = DEFAULT_VERTEX_LIMIT) -> SetColoring:
    """3-uniform (2r, s)-coloring on 2^N vertices from an (r, s)-coloring of K_N.

    Triple u < v < w gets the base colors of {delta(u,v), delta(v,w)}, shifted
    by r when the two deltas decrease. No monochromatic K_n in the base means
    no monochromatic K_{n+1} in the output.
    """
    if base.uniformity != 2:
        raise ValueError("base must be a graph coloring")
    size = _check_size(base, vertex_limit)
    r = base.num_colors
    if 2 * r > 128:
        raise ValueError("doubled palette exceeds 128 colors")
    masks = []
    for u, v, w in colex_subsets(size, 3):
        a, b = delta(u, v), delta(v, w)
        masks.append(base.mask((a, b)) if a < b else base.mask((b, a)) << r)
    return SetColoring(3, size, 2 * r, base.colors_per_edge, tuple(masks), base.slack)


def default_disjoint_pair(r: int, s: int) -> tuple[frozenset[int], frozenset[int]]:
    """Lexicographically least pair of disjoint s-sets."""
    if 2 * s > r:
        raise ValueError(f"two disjoint {s}-sets need r >= {2 * s}, got {r}")
    return frozenset(range(s)), frozenset(range(s, 2 * s))


def step_up_k(
    base: SetColoring,
    local_max: frozenset[int] | None = None,
    local_min: frozenset[int] | None = None,
    *,
    vertex_limit: int = DEFAULT_VERTEX_LIMIT,
) -> SetColoring:
    """(k+1)-uniform (r, s)-coloring on 2^N vertices from a k-uniform one, k >= 3, s <= r/2.

    Monotone delta sequences copy the base color of the delta set; otherwise
    the first turn of the sequence decides: a local maximum gets ``local_max``,
    a local minimum gets the disjoint set ``local_min``.
    """
    k, r, s = base.uniformity, base.num_colors, base.colors_per_edge
    if k < 3:
        raise ValueError("use step_up_graph_to_3 for graph bases")
    if 2 * s > r:
        raise ValueError(f"need s <= r/2, got r={r}, s={s}")
    if local_max is None or local_min is None:
        local_max, local_min = default_disjoint_pair(r, s)
    _check_set(local_max, r, s)
    _check_set(local_min, r, s)
    if set(local_max) & set(local_min):
        raise ValueError("the local-max and local-min color sets must be disjoint")
    size = _check_size(base, vertex_limit)
    on_max, on_min = mask_of(local_max), mask_of(local_min)
    masks = []
    for edge in colex_subsets(size, k + 1):
        ds = deltas(edge)
        if is_monotone(ds):
            masks.append(base.mask(ds))
        else:
            masks.append(on_max if first_turn(ds) == "local-max" else on_min)
    return SetColoring(k + 1, size, r, s, tuple(masks), base.slack)


def default_abc(r: int, s: int) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """Three s-sets with empty common intersection.

    A is the lex-least s-set, B the lex-greatest, and C the lex-least s-set
    avoiding A & B. For (r, s) = (3, 2) this gives {0,1}, {1,2}, {0,2}.
    """
    if 3 * s > 2 * r:
        raise ValueError(f"need s <= 2r/3, got r={r}, s={s}")
    a = frozenset(range(s))
    b = frozenset(range(r - s, r))
    c = frozenset([x for x in range(r) if x not in a & b][:s])
    return a, b, c


def _check_set(colors, r: int, s: int) -> None:
    colors = set(colors)
    if len(colors) != s or any(not 0 <= x < r for x in colors):
        raise ValueError(f"{sorted(colors)} is not an {s}-subset of 0..{r - 1}")


def step_up_3_to_4(
    base: SetColoring,
    A: frozenset[int] | None = None,
    B: frozenset[int] | None = None,
    C: frozenset[int] | None = None,
    *,
    vertex_limit: int = DEFAULT_VERTEX_LIMIT,
) -> SetColoring:
    """4-uniform (r, s)-coloring on 2^N vertices from a 3-uniform one, s <= 2r/3.

    With (d1, d2, d3) the delta sequence: monotone copies the base color of
    {d1, d2, d3}; d3 > d1 > d2 gives A; d1 > d3 > d2 gives B; d2 above both
    neighbours gives C. A, B and C must have no common color.
    """
    if base.uniformity != 3:
        raise ValueError("base must be 3-uniform")
    r, s = base.num_colors, base.colors_per_edge
    if 3 * s > 2 * r:
        raise ValueError(f"need s <= 2r/3, got r={r}, s={s}")
    if A is None or B is None or C is None:
        A, B, C = default_abc(r, s)
    for x in (A, B, C):
        _check_set(x, r, s)
    if set(A) & set(B) & set(C):
        raise ValueError("A, B and C must have empty common intersection")
    size = _check_size(base, vertex_limit)
    fixed = {"A": mask_of(A), "B": mask_of(B), "C": mask_of(C)}
    masks = []
    for edge in colex_subsets(size, 4):
        ds = deltas(edge)
        label = label_3_to_4(ds)
        masks.append(base.mask(ds) if label == "monotone" else fixed[label])
    return SetColoring(4, size, r, s, tuple(masks), base.slack)


def delta_matrix(num_bits: int) -> np.ndarray:
    """``D[u, v] = delta(u, v)`` as uint8 for all u != v below 2^num_bits (diagonal 255)."""
    size = 1 << num_bits
    idx = np.arange(size)
    x = np.bitwise_xor.outer(idx, idx)
    lengths = np.zeros(size, dtype=np.int16)
    for b in range(num_bits):
        lengths[1 << b:] += 1
    return ((lengths[x] - 1) % 256).astype(np.uint8)


@njit(cache=True, boundscheck=False)
def _triple_scan(D):
    # per (u, v): min over w of delta(u,v) ^ delta(v,w) must be nonzero, and
    # max(delta(u,v), delta(v,w)) ^ delta(u,w) must vanish; both reduce cleanly
    size = D.shape[0]
    for u in range(size):
        for v in range(u + 1, size):
            duv = D[u, v]
            right = D[v, v + 1:]
            outer = D[u, v + 1:]
            diff = np.uint8(255)
            bad = np.uint8(0)
            for i in range(right.shape[0]):
                x = right[i]
                diff = min(diff, x ^ duv)
                bad |= (x if x > duv else duv) ^ outer[i]
            if diff == 0 or bad:
                return u, v
    return -1, -1


@njit(cache=True, boundscheck=False)
def _chain_step(prev, bit, high):
    # out[a, c] = {max(x, delta(b, c)) : a < b < c, x in prev[a, b]} as bitmasks
    size = prev.shape[0]
    out = np.zeros_like(prev)
    for a in range(size):
        for b in range(a + 1, size):
            m = prev[a, b]
            if m == 0:
                continue
            row = out[a, b + 1:]
            bits = bit[b, b + 1:]
            if m & (m - 1) == 0:
                for i in range(row.shape[0]):
                    x = bits[i]
                    row[i] |= x if x > m else m
            else:
                low = m & -m
                hi = high[b, b + 1:]
                for i in range(row.shape[0]):
                    x = bits[i]
                    row[i] |= (m & hi[i]) | (x if x >= low else 0)
    return out


def check_delta_properties(num_bits: int, chain_length: int = 5) -> dict[str, int]:
    """Exhaustively confirm both delta facts on the vertices 0..2^num_bits - 1.

    Every triple u < v < w is scanned for delta(u,v) != delta(v,w) and
    delta(u,w) = max(delta(u,v), delta(v,w)). Longer chains go through a
    dynamic program that holds, for each endpoint pair (a, c), the set of
    values the maximum consecutive delta takes over all chains of the current
    length from a to c; the property holds iff that set is exactly
    {delta(a, c)} whenever such a chain exists. Raises AssertionError on the
    first failure.
    """
    if not 1 <= num_bits <= 14:
        raise ValueError("num_bits must lie in 1..14")
    return verify_delta_matrix(delta_matrix(num_bits), chain_length)


def verify_delta_matrix(D: np.ndarray, chain_length: int = 5) -> dict[str, int]:
    """The checks of :func:`check_delta_properties` on an explicit delta matrix."""
    u, v = _triple_scan(D)
    if u >= 0:
        raise AssertionError(f"a triple starting {(u, v)} violates a delta property")
    size = D.shape[0]
    upper = np.triu(np.ones((size, size), dtype=bool), 1)
    bit = np.where(upper, np.left_shift(1, D.astype(np.int16)), 0).astype(np.int16)
    high = (~((bit << 1) - 1)).astype(np.int16)
    gaps = np.arange(size)[None, :] - np.arange(size)[:, None]
    prev = bit
    chains = 0
    for length in range(3, chain_length + 1):
        prev = _chain_step(prev, bit, high)
        reachable = gaps >= length - 1
        if np.any(prev[reachable] != bit[reachable]) or np.any(prev[~reachable]):
            raise AssertionError(f"max property fails for some chain of length {length}")
        chains += comb(size, length)
    return {"vertices": size, "triples": comb(size, 3), "chains": chains}
