"""Explicit graph set-colorings with no monochromatic K_n.

* :func:`product_coloring` lifts an (a, b)-coloring of K_q to the words of a
  q-ary code, so that each edge collects b colors per differing coordinate.
* :func:`affine_partition_family` partitions F_q^d into the cosets of each
  k-dimensional subspace; :func:`partitions_to_coloring` turns any such family
  into a coloring whose color classes are complete multipartite.

The hypergraph stepping-up constructions live in :mod:`setramsey.stepup`.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product

from .codes import Code, PartitionFamily
from .coloring import MAX_COLORS, SetColoring, colors_of
from .fields import MAX_FIELD_ORDER, field, prime_power


def pentagon_coloring() -> SetColoring:
    """The 2-coloring of K_5 into two 5-cycles: no monochromatic triangle."""
    return SetColoring.from_function(2, 5, 2, 1, lambda e: [0 if (e[1] - e[0]) in (1, 4) else 1])


def random_coloring(num_vertices: int, r: int, s: int, seed: int, uniformity: int = 2) -> SetColoring:
    """Each edge gets an independent uniform s-subset of the r colors."""
    rng = random.Random(seed)
    palette = range(r)
    return SetColoring.from_function(uniformity, num_vertices, r, s, lambda e: rng.sample(palette, s))


def product_coloring(base: SetColoring, code: Code) -> SetColoring:
    """Coloring of the complete graph on the codewords.

    Edge (x, y) receives color ``i * a + c`` for every coordinate i with
    x_i != y_i and every color c on the base edge {x_i, y_i}, where a is the
    base palette size. Each edge therefore carries exactly b times the
    Hamming distance many colors.
    """
    if base.uniformity != 2:
        raise ValueError("product construction needs a graph coloring as base")
    if code.alphabet_size != base.num_vertices:
        raise ValueError(f"code alphabet {code.alphabet_size} must equal base order {base.num_vertices}")
    a, m = base.num_colors, code.length
    if a * m > MAX_COLORS:
        raise ValueError(f"product palette {a * m} exceeds {MAX_COLORS}")
    if len(code.words) < 2:
        raise ValueError("need at least two codewords")
    words = code.words

    def colors(e):
        x, y = words[e[0]], words[e[1]]
        mask = 0
        for i, (xi, yi) in enumerate(zip(x, y)):
            if xi != yi:
                mask |= base.mask((xi, yi)) << (i * a)
        return colors_of(mask)

    return SetColoring.from_function(2, len(words), a * m, code.claimed_distance * base.colors_per_edge,
                                     colors, slack=True)


def gaussian_binomial(d: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^d."""
    if not 0 <= k <= d:
        raise ValueError(f"need 0 <= k <= d, got d={d}, k={k}")
    num = den = 1
    for i in range(k):
        num *= q ** (d - i) - 1
        den *= q ** (k - i) - 1
    return num // den


@dataclass(frozen=True)
class AffineParams:
    """F_q^d with its k-dimensional subspaces; fixes the (n, r, s) of the coloring.

    n = q^(d-k) + 1, r = number of k-subspaces, s = r * (1 - (q^k - 1)/(q^d - 1)),
    on N = q^d vertices.
    """

    field_order: int
    dimension: int
    subspace_dimension: int

    def __post_init__(self):
        q, d, k = self.field_order, self.dimension, self.subspace_dimension
        if prime_power(q) is None:
            raise ValueError(f"{q} is not a prime power")
        if not 0 < k < d:
            raise ValueError(f"need 0 < k < d, got d={d}, k={k}")
        if self.s_exact.denominator != 1:
            raise ValueError("colors per edge is not an integer")

    @property
    def q(self) -> int:
        return self.field_order

    @property
    def n(self) -> int:
        return self.field_order ** (self.dimension - self.subspace_dimension) + 1

    @property
    def r(self) -> int:
        return gaussian_binomial(self.dimension, self.subspace_dimension, self.field_order)

    @cached_property
    def s_exact(self) -> Fraction:
        q, d, k = self.field_order, self.dimension, self.subspace_dimension
        return (1 - Fraction(q ** k - 1, q ** d - 1)) * gaussian_binomial(d, k, q)

    @property
    def s(self) -> int:
        return int(self.s_exact)

    @property
    def N(self) -> int:
        return self.field_order ** self.dimension


def find_affine_params(n: int, r: int, s: int, max_q: int = MAX_FIELD_ORDER) -> list[AffineParams]:
    """Every affine parameter set realising exactly (n, r, s)."""
    found = []
    for q in range(2, max_q + 1):
        if prime_power(q) is None:
            continue
        d = 2
        while gaussian_binomial(d, 1, q) <= r:
            for k in range(1, d):
                if q ** (d - k) + 1 == n and gaussian_binomial(d, k, q) == r:
                    p = AffineParams(q, d, k)
                    if p.s == s:
                        found.append(p)
            d += 1
    return found


def _vector_index(vec, q: int) -> int:
    idx = 0
    for x in vec:
        idx = idx * q + x
    return idx


def subspaces(q: int, d: int, k: int) -> list[frozenset[int]]:
    """All k-dimensional subspaces of F_q^d as sets of vector indices.

    One subspace per reduced row echelon basis, so there are no duplicates.
    Vectors are indexed by their base-q digits, first coordinate most significant.
    """
    F = field(q)
    out = []
    for pivots in combinations(range(d), k):
        free = [(i, j) for i, piv in enumerate(pivots) for j in range(piv + 1, d) if j not in pivots]
        for fill in product(range(q), repeat=len(free)):
            rows = [[0] * d for _ in range(k)]
            for i, piv in enumerate(pivots):
                rows[i][piv] = 1
            for (i, j), x in zip(free, fill):
                rows[i][j] = x
            span = set()
            for coeffs in product(range(q), repeat=k):
                vec = [0] * d
                for c, row in zip(coeffs, rows):
                    if c:
                        vec = [F.add(v, F.mul(c, x)) for v, x in zip(vec, row)]
                span.add(_vector_index(vec, q))
            out.append(frozenset(span))
    return out


def affine_partition_family(p: AffineParams) -> PartitionFamily:
    """One partition of F_q^d per k-subspace S: x and y share a part iff y - x is in S."""
    q, d = p.field_order, p.dimension
    F = field(q)
    vectors = list(product(range(q), repeat=d))
    rows = []
    for sub in subspaces(q, d, p.subspace_dimension):
        members = [vectors[i] for i in sorted(sub)]
        labels: dict[int, int] = {}
        row = []
        for x in vectors:
            coset = min(_vector_index([F.add(a, b) for a, b in zip(x, sv)], q) for sv in members)
            row.append(labels.setdefault(coset, len(labels)))
        rows.append(tuple(row))
    return PartitionFamily(len(vectors), len(rows), q ** (d - p.subspace_dimension), tuple(rows))


def partitions_to_coloring(pf: PartitionFamily) -> SetColoring:
    """Give edge {u, v} every color i such that partition i separates u and v.

    The result is exact when every pair is separated equally often, and slack
    (with the minimum count as colors per edge) otherwise.
    """
    if pf.num_partitions > MAX_COLORS:
        raise ValueError(f"{pf.num_partitions} partitions exceed the palette limit {MAX_COLORS}")
    rows = pf.assignment

    def colors(e):
        u, v = e
        return [i for i, row in enumerate(rows) if row[u] != row[v]]

    counts = {len(colors(e)) for e in combinations(range(pf.num_vertices), 2)}
    low = min(counts)
    if low == 0:
        raise ValueError("some pair of vertices is not separated by any partition")
    return SetColoring.from_function(2, pf.num_vertices, pf.num_partitions, low, colors, slack=len(counts) > 1)


def affine_coloring(p: AffineParams) -> SetColoring:
    return partitions_to_coloring(affine_partition_family(p))
