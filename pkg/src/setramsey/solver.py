"""Exact small set-coloring Ramsey numbers and certified lower-bound colorings.

:func:`solve_exact` climbs N = n, n+1, ... looking for an (r, s)-coloring of
K_N with no monochromatic K_n. Each success is a lower witness; the first N
where the search space is exhausted (or where the Turán inequality already
forces a clique) is the exact value. Exhaustive answers are replayed by a
second, deliberately naive search before they are reported.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Any

from . import _cliques
from ._cliques import Budget
from .bounds import trivial_value, turan_upper, upper_bounds
from .codes import greedy_gv_code
from .coloring import SetColoring, colex_subsets, colors_of, find_mono_clique, trim_to_exact, validate
from .constructions import AffineParams, affine_coloring, find_affine_params, gaussian_binomial, pentagon_coloring, product_coloring
from .errors import BudgetExceeded, ResourceLimitError, StrategyError
from .fields import MAX_FIELD_ORDER, prime_power
from .stepup import step_up_graph_to_3

__all__ = [
    "DEFAULT_BUDGET", "STRATEGIES", "SolveResult", "affine_params_for", "graph_bases", "prove_lower",
    "replay_exists", "search_coloring", "solve_exact", "trivial_case",
    "ProcessState", "check_trace", "extract_clique_process",
]

DEFAULT_BUDGET = 2_000_000
DEFAULT_SET_LIMIT = 10_000
STRATEGIES = ("affine", "product", "stepup", "search")


@dataclass
class SolveResult:
    n: int
    r: int
    s: int
    k: int
    status: str  # "exact", "lower-only" or "unknown"
    lower: int  # R(n; r, s) >= lower
    upper: int | None  # R(n; r, s) <= upper, when known
    certificate: str | None  # "trivial", "turan" or "exhaustive" for exact results
    witness: SetColoring | None  # coloring of K_{lower-1} with no monochromatic K_n
    stats: dict[str, Any] = field(default_factory=dict)

    @property
    def value(self) -> int | None:
        return self.lower if self.status == "exact" else None

    def to_json(self) -> dict[str, Any]:
        w = self.witness
        return {
            "n": self.n, "r": self.r, "s": self.s, "k": self.k,
            "status": self.status, "value": self.value,
            "lower": self.lower, "upper": self.upper,
            "certificate": self.certificate,
            "witness": None if w is None else {"N": w.num_vertices, "colors": [list(colors_of(m)) for m in w.masks]},
            "stats": self.stats,
        }


def trivial_case(n: int, r: int, s: int) -> int | None:
    return trivial_value(n, r, s)


def _first_use_table(sets: list[int], r: int) -> list[list[int]]:
    """allowed[used] lists (set, new_used) pairs respecting first-use color order.

    A color set may introduce new colors only as the next unused indices.
    Relabelling colors by first appearance maps every coloring to one that
    obeys this rule, so nothing is lost.
    """
    table = []
    for used in range(r + 1):
        row = []
        for S in sets:
            fresh = S >> used
            if fresh & (fresh + 1) == 0:  # fresh bits are a prefix 1..1
                row.append((S, used + fresh.bit_count()))
        table.append(row)
    return table


def search_coloring(n: int, r: int, s: int, N: int, *, budget: int | Budget | None = None) -> SetColoring | None:
    """An (r, s)-coloring of K_N with no monochromatic K_n, or None if none exists.

    Backtracks over edges in colex order and color sets in lexicographic
    order. A color set is rejected as soon as one of its colors would close
    a monochromatic K_n with already colored edges.
    """
    if n < 2 or not 1 <= s <= r:
        raise ValueError("need n >= 2 and 1 <= s <= r")
    if comb(r, s) > DEFAULT_SET_LIMIT:
        raise ResourceLimitError(f"C({r},{s}) color sets exceed {DEFAULT_SET_LIMIT}")
    if N < 2:
        raise ValueError("a graph coloring needs at least two vertices")
    if not isinstance(budget, Budget):
        budget = Budget(budget)
    edges = list(colex_subsets(N, 2))
    sets = [sum(1 << c for c in combo) for combo in combinations(range(r), s)]
    allowed = _first_use_table(sets, r)
    adj = [[0] * N for _ in range(r)]
    chosen = [0] * len(edges)
    load = [0] * r

    def closes(u: int, v: int, color: int) -> bool:
        a = adj[color]
        common = a[u] & a[v]
        if n == 2:
            return True
        if n == 3:
            return common != 0
        return common.bit_count() >= n - 2 and _cliques.has_clique(a, 2, common, n - 2, budget) is not None

    def place(i: int, used: int) -> bool:
        budget.spend()
        if i == len(edges):
            return True
        u, v = edges[i]
        # value ordering only: sets made of rarely used colors first
        options = sorted(allowed[used], key=lambda opt: (sum(load[c] for c in _cliques.bits(opt[0])), opt[0]))
        for S, new_used in options:
            if any(closes(u, v, c) for c in _cliques.bits(S)):
                continue
            for c in _cliques.bits(S):
                adj[c][u] |= 1 << v
                adj[c][v] |= 1 << u
                load[c] += 1
            chosen[i] = S
            if place(i + 1, new_used):
                return True
            for c in _cliques.bits(S):
                adj[c][u] ^= 1 << v
                adj[c][v] ^= 1 << u
                load[c] -= 1
        return False

    if not place(0, 0):
        return None
    return SetColoring(2, N, r, s, tuple(chosen))


def replay_exists(n: int, r: int, s: int, N: int, *, budget: int | None = DEFAULT_BUDGET) -> bool:
    """Independent check of whether some (r, s)-coloring of K_N avoids monochromatic K_n.

    Shares nothing with :func:`search_coloring`: edges go in lexicographic
    order, color sets are Python frozensets and every n-set is checked
    directly once its last edge is colored. The only symmetry used is that
    the first edge may take the set {0, ..., s-1}.
    """
    spent = Budget(budget)
    pairs = list(combinations(range(N), 2))
    position = {p: i for i, p in enumerate(pairs)}
    options = [frozenset(x) for x in combinations(range(r), s)]
    coloring: dict[tuple[int, int], frozenset[int]] = {}

    def bad(a: int, b: int) -> bool:
        here = position[(a, b)]
        ready = [w for w in range(N) if w not in (a, b)
                 and position[tuple(sorted((w, a)))] < here and position[tuple(sorted((w, b)))] < here]
        for rest in combinations(ready, n - 2):
            group = sorted((a, b) + rest)
            if any(position[p] > here for p in combinations(group, 2)):
                continue
            common = frozenset(range(r))
            for p in combinations(group, 2):
                common &= coloring[p]
            if common:
                return True
        return False

    def extend(i: int) -> bool:
        spent.spend()
        if i == len(pairs):
            return True
        a, b = pairs[i]
        for opt in options[:1] if i == 0 else options:
            coloring[(a, b)] = opt
            if not bad(a, b) and extend(i + 1):
                return True
        del coloring[(a, b)]
        return False

    if N < n:
        return True
    return extend(0)


def _verified(c: SetColoring, n: int) -> SetColoring:
    if not validate(c).ok:
        raise AssertionError("constructed coloring violates the coloring invariants")
    w = find_mono_clique(c, n)
    if w is not None:
        raise AssertionError(f"constructed coloring contains monochromatic K_{n}: {w}")
    return c


def _with_palette(c: SetColoring, r: int, s: int) -> SetColoring:
    """View c as using r >= c.r colors and keep the s smallest colors per edge."""
    if r < c.num_colors or s > c.colors_per_edge:
        raise ValueError("can only widen the palette and lower the colors per edge")
    return trim_to_exact(SetColoring(c.uniformity, c.num_vertices, r, s, c.masks, slack=True))


def affine_params_for(n: int, max_colors: int = 128, max_vertices: int = 256) -> list[AffineParams]:
    """Every affine parameter set whose coloring avoids monochromatic K_n, smallest first."""
    out = []
    for q in range(2, MAX_FIELD_ORDER + 1):
        if prime_power(q) is None:
            continue
        e = 1
        while q ** e < n - 1:
            e += 1
        if q ** e != n - 1:
            continue
        k = 1
        while q ** (k + e) <= max_vertices and gaussian_binomial(k + e, k, q) <= max_colors:
            try:
                out.append(AffineParams(q, k + e, k))
            except ValueError:
                pass
            k += 1
    return sorted(out, key=lambda p: (p.N, p.r, p.q))


def graph_bases(n: int) -> list[tuple[str, SetColoring]]:
    """Small certified graph colorings with no monochromatic K_n."""
    bases = [("pentagon", pentagon_coloring())] if n == 3 else []
    for p in affine_params_for(n, max_vertices=16):
        bases.append((f"affine q={p.q} d={p.dimension} k={p.subspace_dimension}", affine_coloring(p)))
    return bases


def _by_affine(n: int, r: int, s: int, N: int) -> SetColoring:
    for p in find_affine_params(n, r, s):
        if p.N >= N:
            return affine_coloring(p).induced(range(N))
    for p in affine_params_for(n):
        if p.N >= N and p.r <= r and p.s >= s:
            return _with_palette(affine_coloring(p), r, s).induced(range(N))
    raise StrategyError(f"no affine construction gives {N} vertices for (n, r, s) = ({n}, {r}, {s})")


def _by_product(n: int, r: int, s: int, N: int, word_limit: int = 1 << 16) -> SetColoring:
    for _, base in graph_bases(n):
        a, b, q = base.num_colors, base.colors_per_edge, base.num_vertices
        d_min = -(-s // b)
        for m in range(max(d_min, 1), r // a + 1):
            if q ** m > word_limit:
                break
            code = greedy_gv_code(q, m, d_min)
            if len(code) >= max(N, 2):
                lifted = product_coloring(base, code)
                return _with_palette(lifted, r, s).induced(range(N))
    raise StrategyError(f"no product construction reaches {N} vertices for (n, r, s) = ({n}, {r}, {s})")


def _by_stepup(n: int, r: int, s: int, N: int, budget) -> SetColoring:
    if r % 2 or 2 * s > r:
        raise StrategyError("3-uniform step-up needs an even palette r with s <= r/2")
    bits = max(2, (N - 1).bit_length())
    base = None
    for strategy in ("affine", "product", "search"):
        try:
            base = prove_lower(n - 1, r // 2, s, bits, strategy, budget=budget)
        except StrategyError:
            continue
        if base is not None:
            break
    if base is None:
        raise StrategyError(f"no graph coloring of K_{bits} avoids monochromatic K_{n - 1} with ({r // 2}, {s})")
    lifted = step_up_graph_to_3(base)
    return SetColoring.from_function(3, N, r, s, lambda e: colors_of(lifted.mask(e)), lifted.slack)


def prove_lower(
    n: int, r: int, s: int, N: int, strategy: str, *, k: int = 2, budget: int | None = DEFAULT_BUDGET
) -> SetColoring | None:
    """A verified (r, s)-coloring of the complete k-graph on N vertices without monochromatic K_n.

    ``strategy`` is one of "affine", "product", "stepup" (k = 3) or "search".
    Returns None only when "search" proves that no such coloring exists.
    Raises :class:`StrategyError` when the strategy cannot produce one.
    """
    if strategy not in STRATEGIES:
        raise StrategyError(f"unknown strategy {strategy!r}; choose from {', '.join(STRATEGIES)}")
    if strategy == "stepup":
        if k != 3:
            raise StrategyError("the step-up strategy builds 3-uniform colorings")
        return _verified(_by_stepup(n, r, s, N, budget), n)
    if k != 2:
        raise StrategyError(f"strategy {strategy!r} builds graph colorings only")
    if strategy == "affine":
        return _verified(_by_affine(n, r, s, N), n)
    if strategy == "product":
        return _verified(_by_product(n, r, s, N), n)
    found = search_coloring(n, r, s, N, budget=budget)
    return None if found is None else _verified(found, n)


def _best_upper(n: int, r: int, s: int) -> int | None:
    values = [b.value for b in upper_bounds(n, r, s) if b.value is not None]
    return min(values) if values else None


def solve_exact(
    n: int, r: int, s: int, max_N: int = 12, budget: int | None = DEFAULT_BUDGET,
    *, replay_budget: int | None = DEFAULT_BUDGET, use_turan: bool = True,
) -> SolveResult:
    """Exact R(n; r, s) for graphs when it lies within ``max_N``.

    Known affine colorings are used to skip ahead; everything else is found
    or refuted by :func:`search_coloring`. Statuses: "exact" (with a
    certificate), "lower-only" (max_N reached) or "unknown" (budget ran out).
    With ``use_turan=False`` the upper side is always settled by exhaustion.
    """
    if not (n >= 2 and r > s >= 1):
        raise ValueError("need n >= 2 and r > s >= 1")
    if comb(r, s) > DEFAULT_SET_LIMIT:
        raise ResourceLimitError(f"C({r},{s}) color sets exceed {DEFAULT_SET_LIMIT}")
    start = time.perf_counter()
    nodes = Budget(budget)
    stats: dict[str, Any] = {"searched": []}

    def finish(status, lower, upper, cert, witness):
        stats["nodes"] = nodes.used
        stats["seconds"] = round(time.perf_counter() - start, 6)
        return SolveResult(n, r, s, 2, status, lower, upper, cert, witness, stats)

    if trivial_case(n, r, s) is not None:
        witness = SetColoring.constant(2, n - 1, r, range(s)) if n >= 3 else None
        return finish("exact", n, n, "trivial", witness)

    turan = turan_upper(n, r, s).value if use_turan else None
    witness: SetColoring | None = None
    N = n
    while N <= max_N:
        if turan is not None and N >= turan:
            return finish("exact", N, N, "turan", witness)
        jump = next((p for p in find_affine_params(n, r, s) if p.N >= N), None)
        if jump is not None:
            witness = _verified(affine_coloring(jump), n)
            stats["searched"].append({"N": jump.N, "found": True, "by": "affine"})
            N = jump.N + 1
            continue
        try:
            found = search_coloring(n, r, s, N, budget=nodes)
        except BudgetExceeded:
            return finish("unknown", N, _best_upper(n, r, s), None, witness)
        stats["searched"].append({"N": N, "found": found is not None, "by": "search"})
        if found is None:
            try:
                if replay_exists(n, r, s, N, budget=replay_budget):
                    raise AssertionError(f"replay found a coloring of K_{N} that the search missed")
            except BudgetExceeded:
                stats["replay"] = "budget exceeded"
                return finish("unknown", N, _best_upper(n, r, s), None, witness)
            stats["replay"] = "agrees"
            return finish("exact", N, N, "exhaustive", witness)
        witness = _verified(found, n)
        N += 1
    return finish("lower-only", N, _best_upper(n, r, s), None, witness)


from .process import ProcessState, check_trace, extract_clique_process  # noqa: E402
