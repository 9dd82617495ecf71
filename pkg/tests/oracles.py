"""Deliberately naive reference implementations used to cross-check the package.

Nothing here imports the package's search or construction code; inputs are
plain dicts and tuples.
"""
from __future__ import annotations

from decimal import Decimal, getcontext
from fractions import Fraction
from itertools import combinations, product
from math import comb, factorial


def edge_table(coloring) -> dict[tuple[int, ...], frozenset[int]]:
    """Read a coloring edge by edge through its public accessor only."""
    return {e: frozenset(coloring.colors(e)) for e in combinations(range(coloring.num_vertices), coloring.uniformity)}


def mono_cliques(table, N: int, k: int, n: int):
    """Every (vertex set, color) pair forming a monochromatic K_n."""
    out = []
    for group in combinations(range(N), n):
        common = None
        for e in combinations(group, k):
            common = table[e] if common is None else common & table[e]
            if not common:
                break
        if common:
            out.extend((group, c) for c in sorted(common))
    return out


def has_mono_clique(table, N: int, k: int, n: int) -> bool:
    for group in combinations(range(N), n):
        common = None
        for e in combinations(group, k):
            common = table[e] if common is None else common & table[e]
            if not common:
                break
        if common:
            return True
    return False


def clique_number(table, N: int, k: int, color: int) -> int:
    best = k - 1
    for size in range(k, N + 1):
        if any(all(color in table[e] for e in combinations(g, k)) for g in combinations(range(N), size)):
            best = size
        else:
            break
    return best


def distance(u, v) -> int:
    return sum(a != b for a, b in zip(u, v))


def naive_greedy(q: int, m: int, d: int) -> list[tuple[int, ...]]:
    kept = []
    for w in product(range(q), repeat=m):
        if all(distance(w, x) >= d for x in kept):
            kept.append(w)
    return kept


def neighbours(word, q: int, radius: int):
    """Every word at distance 1..radius from ``word``."""
    m = len(word)
    for t in range(1, radius + 1):
        for spots in combinations(range(m), t):
            choices = [[x for x in range(q) if x != word[i]] for i in spots]
            for repl in product(*choices):
                w = list(word)
                for i, x in zip(spots, repl):
                    w[i] = x
                yield tuple(w)


def all_far_apart(words, q: int, d: int) -> bool:
    """Pairwise distance >= d, by pairs or by balls, whichever is cheaper."""
    if len(set(words)) < len(words):
        return False
    n, m = len(words), len(words[0])
    if n * ball_count_formula(q, m, d - 1) < n * n // 2:
        present = set(words)
        return not any(w2 in present for w in words for w2 in neighbours(w, q, d - 1))
    return all(distance(u, v) >= d for u, v in combinations(words, 2))


def ball_count_formula(q: int, m: int, radius: int) -> int:
    return sum(comb(m, i) * (q - 1) ** i for i in range(radius + 1))


def ball_count(q: int, m: int, radius: int) -> int:
    centre = (0,) * m
    return sum(1 for w in product(range(q), repeat=m) if distance(w, centre) <= radius)


def max_code_size(q: int, m: int, d: int) -> int:
    """A_q(m, d) by trying every subset size downward (tiny parameters only)."""
    words = list(product(range(q), repeat=m))
    rest = words[1:]
    for size in range(len(words), 0, -1):
        for combo in combinations(rest, size - 1):
            group = (words[0],) + combo
            if all(distance(a, b) >= d for a, b in combinations(group, 2)):
                return size
    return 1


def msb_index(u: int, v: int, bits: int) -> int:
    """Position of the most significant differing bit, read off binary strings."""
    su, sv = format(u, f"0{bits}b"), format(v, f"0{bits}b")
    for pos, (a, b) in enumerate(zip(su, sv)):
        if a != b:
            return bits - 1 - pos
    raise ValueError("equal vertices")


def rank_pattern(seq) -> tuple[int, ...]:
    order = sorted(range(len(seq)), key=lambda i: seq[i])
    ranks = [0] * len(seq)
    for rank, i in enumerate(order):
        ranks[i] = rank
    return tuple(ranks)


# the six orderings of three distinct values, classified by hand
PATTERN_3_TO_4 = {
    (0, 1, 2): "monotone", (2, 1, 0): "monotone",
    (0, 2, 1): "C", (1, 2, 0): "C",
    (1, 0, 2): "A", (2, 0, 1): "B",
}


def classify_first_turn(seq) -> str:
    signs = ["up" if b > a else "down" for a, b in zip(seq, seq[1:])]
    if all(x == "up" for x in signs) or all(x == "down" for x in signs):
        return "monotone"
    for x, y in zip(signs, signs[1:]):
        if x != y:
            return "local-max" if x == "up" else "local-min"
    raise AssertionError("unreachable")


def turan_by_compositions(N: int, n: int) -> int:
    """Max edges of a complete (n-1)-partite graph on N vertices, over all part sizes."""
    parts = n - 1
    best = 0

    def rec(left: int, slots: int, sizes: list[int]) -> None:
        nonlocal best
        if slots == 1:
            sz = sizes + [left]
            best = max(best, sum(a * b for a, b in combinations(sz, 2)))
            return
        for x in range(left + 1):
            rec(left - x, slots - 1, sizes + [x])

    rec(N, parts, [])
    return best


def first_moment_decimal(n: int, a: int, b: int) -> Decimal:
    getcontext().prec = 80
    return (Decimal(a) / Decimal(b)) ** (Decimal(n - 1) / 2) * (Decimal(factorial(n)) / Decimal(a)) ** (Decimal(1) / n)


def simple_upper_fraction(n: int, r: int, s: int) -> Fraction:
    return Fraction(r, r - s) * Fraction(r, s) ** ((n - 2) * r + 1)


def turan_least_N(n: int, r: int, s: int, limit: int = 500):
    for N in range(n, limit):
        if Fraction(s, r) > Fraction(turan_by_compositions(N, n), comb(N, 2)):
            return N
    return None
