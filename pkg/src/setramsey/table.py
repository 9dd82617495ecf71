"""Best known lower and upper values of R(n; r, s) over a parameter grid.

Lower values come from colorings that are built and checked here (so each
one is a certificate) plus the first-moment formula; upper values from the
applicable closed-form bounds.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Any, Iterable

from .bounds import formula_lower_bounds, upper_bounds
from .codes import greedy_gv_code
from .coloring import find_mono_clique
from .constructions import affine_coloring, product_coloring
from .solver import affine_params_for, graph_bases

TABLE_VERSION = 1
# constructed colorings above this many vertices are not re-verified, so not used
VERIFY_LIMIT = 200


@lru_cache(maxsize=None)
def _affine(n: int, max_colors: int):
    out = []
    for p in affine_params_for(n, max_colors=max_colors, max_vertices=VERIFY_LIMIT):
        c = affine_coloring(p)
        if find_mono_clique(c, n) is None:
            out.append((p, c))
    return out


@lru_cache(maxsize=None)
def _bases(n: int):
    return graph_bases(n)


@lru_cache(maxsize=None)
def _product_size(n: int, base_index: int, m: int, d: int) -> int:
    """Vertices of the verified product coloring, 0 if it is not usable."""
    base = _bases(n)[base_index][1]
    code = greedy_gv_code(base.num_vertices, m, d)
    if not 2 <= len(code) <= VERIFY_LIMIT:
        return 0
    # narrowing to s colors later only removes colors, so checking here suffices
    return len(code) if find_mono_clique(product_coloring(base, code), n) is None else 0


def constructive_lower(n: int, r: int, s: int) -> tuple[int, str]:
    """Largest N (plus one) reached by a verified coloring avoiding monochromatic K_n."""
    best, source = n, "order"
    for p, c in _affine(n, r):
        if p.s >= s and p.N + 1 > best:
            best, source = p.N + 1, f"affine q={p.q} d={p.dimension} k={p.subspace_dimension}"
    for i, (name, base) in enumerate(_bases(n)):
        a, b, q = base.num_colors, base.colors_per_edge, base.num_vertices
        d = -(-s // b)
        for m in range(max(d, 1), r // a + 1):
            if q ** m > 1 << 14:
                break
            size = _product_size(n, i, m, d)
            if size + 1 > best:
                best, source = size + 1, f"product {name} m={m} d={d}"
    return best, source


def best_known(n: int, r: int, s: int) -> dict[str, Any]:
    lower, lower_src = constructive_lower(n, r, s)
    formula = max(formula_lower_bounds(n, r, s), key=lambda b: b.value)
    ups = [b for b in upper_bounds(n, r, s) if b.value is not None]
    up = min(ups, key=lambda b: b.value) if ups else None
    row = {
        "n": n, "r": r, "s": s,
        "lower": lower, "lower_source": lower_src,
        "formula_lower": formula.value, "formula_source": formula.name,
        "upper": None if up is None else up.value,
        "upper_source": None if up is None else up.name,
    }
    row["exact"] = up is not None and up.value == max(lower, formula.value)
    return row


def bound_table(ns: Iterable[int], rs: Iterable[int]) -> list[dict[str, Any]]:
    """One row per (n, r, s) with n in ``ns``, r in ``rs`` and 1 <= s < r."""
    return [best_known(n, r, s) for n in ns for r in rs for s in range(1, r) if n >= 3]
