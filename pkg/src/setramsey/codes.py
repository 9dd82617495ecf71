"""Error-correcting codes, their size bounds, and the bridge to set-colorings.

Words are tuples over ``{0, ..., q-1}``. Internally a word of length m is also
indexed by the integer whose base-q digits are the word (first coordinate most
significant), so increasing index order is lexicographic word order.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import _cliques
from ._cliques import Budget
from .coloring import SetColoring, colors_of
from .errors import ResourceLimitError

Word = tuple[int, ...]

# greedy_gv_code refuses spaces with more words than this
DEFAULT_ENUMERATION_LIMIT = 1 << 22


@dataclass(frozen=True)
class Code:
    """A q-ary code of length m with a claimed minimum distance d."""

    alphabet_size: int
    length: int
    claimed_distance: int
    words: tuple[Word, ...]

    def __post_init__(self):
        if self.alphabet_size < 2:
            raise ValueError("alphabet size must be >= 2")
        if self.length < 1 or not 1 <= self.claimed_distance <= self.length:
            raise ValueError(f"need 1 <= d <= m, got m={self.length}, d={self.claimed_distance}")
        words = tuple(tuple(int(x) for x in w) for w in self.words)
        for w in words:
            if len(w) != self.length or any(not 0 <= x < self.alphabet_size for x in w):
                raise ValueError(f"word {w} is not in [{self.alphabet_size}]^{self.length}")
        object.__setattr__(self, "words", words)

    @property
    def q(self) -> int:
        return self.alphabet_size

    @property
    def m(self) -> int:
        return self.length

    @property
    def d(self) -> int:
        return self.claimed_distance

    def __len__(self) -> int:
        return len(self.words)


@dataclass(frozen=True)
class PartitionFamily:
    """``num_partitions`` partitions of the same vertex set.

    ``assignment[i][v]`` is the part label of vertex v in partition i.
    """

    num_vertices: int
    num_partitions: int
    parts_per_partition: int
    assignment: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.assignment)
        if len(rows) != self.num_partitions:
            raise ValueError(f"expected {self.num_partitions} partitions, got {len(rows)}")
        for i, row in enumerate(rows):
            if len(row) != self.num_vertices:
                raise ValueError(f"partition {i} labels {len(row)} of {self.num_vertices} vertices")
            if any(not 0 <= x < self.parts_per_partition for x in row):
                raise ValueError(f"partition {i} uses a label outside 0..{self.parts_per_partition - 1}")
        object.__setattr__(self, "assignment", rows)

    def part_counts(self) -> list[int]:
        return [len(set(row)) for row in self.assignment]


def hamming_distance(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum(1 for a, b in zip(u, v) if a != b)


def ball_volume(q: int, m: int, radius: int) -> int:
    """Number of words of [q]^m within Hamming distance ``radius`` of a fixed word."""
    if not 0 <= radius <= m:
        raise ValueError(f"radius must lie in 0..{m}")
    return sum(comb(m, i) * (q - 1) ** i for i in range(radius + 1))


def gv_lower_bound(q: int, m: int, d: int) -> int:
    """ceil(q^m / B(d-1)); every maximal distance-d code is at least this large."""
    return -(-(q ** m) // ball_volume(q, m, d - 1))


def singleton_bound(q: int, m: int, d: int) -> int:
    return q ** (m - d + 1)


def word_index(word: Sequence[int], q: int) -> int:
    idx = 0
    for x in word:
        idx = idx * q + x
    return idx


def index_word(idx: int, q: int, m: int) -> Word:
    digits = [0] * m
    for p in range(m - 1, -1, -1):
        idx, digits[p] = divmod(idx, q)
    return tuple(digits)


def ball_indices(word: Sequence[int], q: int, radius: int) -> list[int]:
    """Indices of every word within ``radius`` of ``word`` (the word itself first)."""
    m = len(word)
    weights = [q ** (m - 1 - p) for p in range(m)]
    base = sum(x * w for x, w in zip(word, weights))
    out = [base]

    def grow(start: int, remaining: int, idx: int) -> None:
        for p in range(start, m):
            x, w = word[p], weights[p]
            for y in range(q):
                if y != x:
                    j = idx + (y - x) * w
                    out.append(j)
                    if remaining > 1:
                        grow(p + 1, remaining - 1, j)

    if radius > 0:
        grow(0, radius, base)
    return out


def greedy_gv_code(
    q: int,
    m: int,
    d: int,
    order: Iterable[Sequence[int]] | None = None,
    *,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> Code:
    """Scan [q]^m in ``order`` and keep each word at distance >= d from all kept ones.

    The default order is lexicographic. Instead of comparing against every
    kept word, each kept word blocks its radius-(d-1) ball.
    """
    if not 1 <= d <= m:
        raise ValueError(f"need 1 <= d <= m, got m={m}, d={d}")
    total = q ** m
    if total > limit:
        raise ResourceLimitError(f"{q}^{m} = {total} words exceeds enumeration limit {limit}")
    if order is None:
        indices: Iterable[int] = range(total)
    else:
        indices = [word_index(w, q) for w in order]
        if len(indices) != total or len(set(indices)) != total:
            raise ValueError("order must enumerate every word of [q]^m exactly once")
    blocked = bytearray(total)
    kept = []
    for idx in indices:
        if blocked[idx]:
            continue
        w = index_word(idx, q, m)
        kept.append(w)
        for j in ball_indices(w, q, d - 1):
            blocked[j] = 1
    return Code(q, m, d, tuple(kept))


def minimum_distance(words: Sequence[Sequence[int]]) -> int | None:
    """Exact minimum pairwise distance (None for fewer than two words).

    Grows Hamming balls around every word while that is cheaper than
    comparing all pairs, which matters for large low-distance codes.
    """
    if len(words) < 2:
        return None
    n, m = len(words), len(words[0])
    q = max(2, max(max(w) for w in words) + 1)
    where = {word_index(w, q) for w in words}
    if len(where) < n:
        return 0
    radius = 1
    while radius <= m and n * ball_volume(q, m, radius) < n * n // 2:
        for w in words:
            if any(j in where for j in ball_indices(w, q, radius)[1:]):
                return radius
        radius += 1
    arr = np.asarray(words, dtype=np.int16)
    best = arr.shape[1]
    for i in range(len(arr) - 1):
        best = min(best, int((arr[i + 1:] != arr[i]).sum(axis=1).min()))
    return best


def close_pair(code: Code) -> tuple[Word, Word] | None:
    """Two words closer than the claimed distance (or equal), if any.

    Uses ball look-ups when that is cheaper than all pairs.
    """
    words = code.words
    radius = code.claimed_distance - 1
    if len(words) * ball_volume(code.q, code.m, radius) < len(words) ** 2 // 2:
        where = {}
        for w in words:
            i = word_index(w, code.q)
            if i in where:
                return where[i], w
            where[i] = w
        for w in words:
            for j in ball_indices(w, code.q, radius)[1:]:
                if j in where:
                    return w, where[j]
        return None
    for u, v in combinations(words, 2):
        if hamming_distance(u, v) < code.claimed_distance:
            return u, v
    return None


def is_valid_code(code: Code) -> bool:
    return close_pair(code) is None


def exhaustive_max_code(q: int, m: int, d: int, *, budget: int | None = None) -> Code:
    """A certified maximum code, by maximum-clique search over [q]^m.

    The first word is fixed to all-zeros, which loses nothing because codes
    are invariant under coordinate-wise translation.
    """
    total = q ** m
    if total > 1024:
        raise ResourceLimitError(f"exhaustive search over {total} words is out of range")
    words = [index_word(i, q, m) for i in range(total)]
    adj = [0] * total
    for i, j in combinations(range(total), 2):
        if hamming_distance(words[i], words[j]) >= d:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    best = _cliques.search(adj, 2, adj[0], budget=Budget(budget))
    return Code(q, m, d, tuple(words[i] for i in [0] + best))


def code_to_coloring(code: Code) -> SetColoring:
    """Color the pair of codewords (u, v) with every coordinate where they differ."""
    if len(code.words) < 2:
        raise ValueError("need at least two codewords")
    words = code.words
    return SetColoring.from_function(
        2, len(words), code.length, code.claimed_distance,
        lambda e: (i for i, (a, b) in enumerate(zip(words[e[0]], words[e[1]])) if a != b),
        slack=True,
    )


def code_partitions(code: Code) -> PartitionFamily:
    """The partitions induced by the coordinates: part of v in partition i is word_v[i]."""
    return PartitionFamily(
        len(code.words), code.length, code.alphabet_size,
        tuple(tuple(w[i] for w in code.words) for i in range(code.length)),
    )


def _class_adjacency(c: SetColoring, color: int) -> list[int]:
    adj = [0] * c.num_vertices
    bit = 1 << color
    for (u, v), m in c.items():
        if m & bit:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return adj


def _greedy_partition(adj: list[int]) -> list[int]:
    labels: list[int] = []
    for v in range(len(adj)):
        used = {labels[u] for u in _cliques.bits(adj[v] & ((1 << v) - 1))}
        labels.append(next(x for x in range(len(adj) + 1) if x not in used))
    return labels


def _exact_partition(adj: list[int], parts: int, budget: Budget) -> list[int] | None:
    n = len(adj)
    order = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    labels = [-1] * n

    def place(i: int, used: int) -> bool:
        budget.spend()
        if i == n:
            return True
        v = order[i]
        taken = {labels[u] for u in _cliques.bits(adj[v]) if labels[u] >= 0}
        # a fresh label is interchangeable with any other fresh label
        for x in range(min(used + 1, parts)):
            if x not in taken:
                labels[v] = x
                if place(i + 1, max(used, x + 1)):
                    return True
        labels[v] = -1
        return False

    return labels if place(0, 0) else None


def _first_appearance(labels: list[int]) -> list[int]:
    relabel: dict[int, int] = {}
    return [relabel.setdefault(x, len(relabel)) for x in labels]


def partition_color_classes(c: SetColoring, parts: int, *, budget: int | None = None) -> PartitionFamily | None:
    """Split every color class into at most ``parts`` independent sets.

    Returns None when some class provably needs more parts. Labels are
    numbered by first appearance in vertex order.
    """
    if c.uniformity != 2:
        raise ValueError("partitioning color classes needs a graph coloring")
    b = Budget(budget)
    rows = []
    for color in range(c.num_colors):
        adj = _class_adjacency(c, color)
        labels = _greedy_partition(adj)
        if max(labels) >= parts:
            labels = _exact_partition(adj, parts, b)
            if labels is None:
                return None
        rows.append(tuple(_first_appearance(labels)))
    return PartitionFamily(c.num_vertices, c.num_colors, parts, tuple(rows))


def coloring_to_code(c: SetColoring, pf: PartitionFamily) -> Code:
    """Map vertex v to its label vector across all partitions.

    Raises ValueError naming the offending pair if some partition puts the
    two ends of an edge of its color into the same part.
    """
    if c.uniformity != 2:
        raise ValueError("coloring_to_code needs a graph coloring")
    if pf.num_partitions != c.num_colors or pf.num_vertices != c.num_vertices:
        raise ValueError("partition family does not match the coloring")
    for (u, v), m in c.items():
        if m.bit_count() < c.colors_per_edge:
            raise ValueError(f"edge {(u, v)} carries fewer than {c.colors_per_edge} colors")
        for i in colors_of(m):
            if pf.assignment[i][u] == pf.assignment[i][v]:
                raise ValueError(f"vertices {u} and {v} share a part of partition {i} but the edge has color {i}")
    words = tuple(tuple(pf.assignment[i][v] for i in range(pf.num_partitions)) for v in range(pf.num_vertices))
    return Code(max(pf.parts_per_partition, 2), c.num_colors, c.colors_per_edge, words)


def all_words(q: int, m: int) -> Code:
    return Code(q, m, 1, tuple(product(range(q), repeat=m)))
