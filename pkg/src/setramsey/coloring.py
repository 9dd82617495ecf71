"""Set-colorings of complete k-uniform hypergraphs.

Colors are 0-based: color ``i`` here is color ``i + 1`` of the palette
``[r] = {1, ..., r}``. Every edge carries its color set as an integer bitmask
(bit ``i`` set means color ``i`` is present), and the masks are stored in a
flat tuple indexed by the colex rank of the edge's sorted vertex tuple.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Iterable, Iterator, Sequence

from . import _cliques
from ._cliques import Budget

MAX_COLORS = 128


def colex_rank(edge: Sequence[int]) -> int:
    """Rank of a sorted vertex tuple among all subsets of its size, in colex order."""
    return sum(comb(v, i + 1) for i, v in enumerate(edge))


def colex_subsets(num_vertices: int, size: int) -> Iterator[tuple[int, ...]]:
    """All ``size``-subsets of ``range(num_vertices)`` as sorted tuples, in colex order."""
    if size == 0:
        yield ()
        return
    for top in range(size - 1, num_vertices):
        for rest in colex_subsets(top, size - 1):
            yield rest + (top,)


def mask_of(colors: Iterable[int]) -> int:
    m = 0
    for c in colors:
        m |= 1 << c
    return m


def colors_of(mask: int) -> tuple[int, ...]:
    return tuple(_cliques.bits(mask))


def _smallest_colors(mask: int, count: int) -> int:
    out = 0
    for _ in range(count):
        low = mask & -mask
        out |= low
        mask ^= low
    return out


@dataclass(frozen=True)
class SetColoring:
    """An assignment of a color set to every edge of the complete k-uniform hypergraph.

    ``masks[colex_rank(e)]`` is the color bitmask of edge ``e``. When ``slack``
    is set, edges may carry more than ``colors_per_edge`` colors.
    """

    uniformity: int
    num_vertices: int
    num_colors: int
    colors_per_edge: int
    masks: tuple[int, ...] = field(repr=False)
    slack: bool = False

    def __post_init__(self):
        k, n_v, r, s = self.uniformity, self.num_vertices, self.num_colors, self.colors_per_edge
        if k < 2:
            raise ValueError(f"uniformity must be >= 2, got {k}")
        if n_v < k:
            raise ValueError(f"need at least {k} vertices, got {n_v}")
        if not 1 <= r <= MAX_COLORS:
            raise ValueError(f"palette size must be in 1..{MAX_COLORS}, got {r}")
        if not 1 <= s <= r:
            raise ValueError(f"colors per edge must be in 1..{r}, got {s}")
        if len(self.masks) != comb(n_v, k):
            raise ValueError(f"expected {comb(n_v, k)} edge entries, got {len(self.masks)}")
        if not isinstance(self.masks, tuple):
            object.__setattr__(self, "masks", tuple(self.masks))

    @classmethod
    def from_function(
        cls,
        uniformity: int,
        num_vertices: int,
        num_colors: int,
        colors_per_edge: int,
        color_fn: Callable[[tuple[int, ...]], Iterable[int]],
        slack: bool = False,
    ) -> "SetColoring":
        masks = tuple(mask_of(color_fn(e)) for e in colex_subsets(num_vertices, uniformity))
        return cls(uniformity, num_vertices, num_colors, colors_per_edge, masks, slack)

    @classmethod
    def constant(cls, uniformity: int, num_vertices: int, num_colors: int, colors: Iterable[int]) -> "SetColoring":
        m = mask_of(colors)
        return cls(uniformity, num_vertices, num_colors, m.bit_count(), (m,) * comb(num_vertices, uniformity))

    # short aliases used throughout the package
    @property
    def k(self) -> int:
        return self.uniformity

    @property
    def N(self) -> int:
        return self.num_vertices

    @property
    def r(self) -> int:
        return self.num_colors

    @property
    def s(self) -> int:
        return self.colors_per_edge

    def edges(self) -> Iterator[tuple[int, ...]]:
        return colex_subsets(self.num_vertices, self.uniformity)

    def items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        return zip(self.edges(), self.masks)

    def mask(self, edge: Sequence[int]) -> int:
        return self.masks[colex_rank(sorted(edge))]

    def colors(self, edge: Sequence[int]) -> tuple[int, ...]:
        return colors_of(self.mask(edge))

    def class_sizes(self) -> list[int]:
        """Number of edges containing each color."""
        sizes = [0] * self.num_colors
        for m in self.masks:
            for c in _cliques.bits(m):
                sizes[c] += 1
        return sizes

    def induced(self, vertices: Sequence[int]) -> "SetColoring":
        """Sub-coloring on ``vertices``, relabelled 0..len-1 in the given order."""
        vs = list(vertices)
        if len(set(vs)) != len(vs):
            raise ValueError("induced vertex list has repeats")
        return SetColoring.from_function(
            self.uniformity, len(vs), self.num_colors, self.colors_per_edge,
            lambda e: colors_of(self.mask([vs[i] for i in e])), self.slack,
        )

    def with_slack(self, slack: bool) -> "SetColoring":
        return SetColoring(self.uniformity, self.num_vertices, self.num_colors,
                           self.colors_per_edge, self.masks, slack)


@dataclass(frozen=True)
class CliqueWitness:
    """A vertex set together with a color present on every edge it spans."""

    vertices: tuple[int, ...]
    color: int


@dataclass
class ValidationReport:
    violations: list[tuple[tuple[int, ...], str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok


def validate(c: SetColoring) -> ValidationReport:
    """Check the color-set size and palette-range invariants edge by edge."""
    report = ValidationReport()
    full = (1 << c.num_colors) - 1
    for edge, m in c.items():
        if m & ~full:
            report.violations.append((edge, f"colors outside 0..{c.num_colors - 1}: {colors_of(m & ~full)}"))
        size = m.bit_count()
        if c.slack and size < c.colors_per_edge:
            report.violations.append((edge, f"{size} colors, need at least {c.colors_per_edge}"))
        elif not c.slack and size != c.colors_per_edge:
            report.violations.append((edge, f"{size} colors, need exactly {c.colors_per_edge}"))
    return report


def color_links(c: SetColoring, color: int) -> list[int]:
    """Link bitmasks of the sub-hypergraph formed by edges containing ``color``."""
    k = c.uniformity
    links = [0] * comb(c.num_vertices, k - 1)
    bit = 1 << color
    for edge, m in c.items():
        if m & bit:
            for i, w in enumerate(edge):
                links[colex_rank(edge[:i] + edge[i + 1:])] |= 1 << w
    return links


def _vertex_degrees(c: SetColoring, color: int) -> list[int]:
    deg = [0] * c.num_vertices
    bit = 1 << color
    for edge, m in c.items():
        if m & bit:
            for v in edge:
                deg[v] += 1
    return deg


def _vertex_mask(c: SetColoring, vertices: Iterable[int] | None) -> int:
    if vertices is None:
        return (1 << c.num_vertices) - 1
    return mask_of(vertices)


def _search_color(c: SetColoring, color: int, n: int, budget: Budget, within: int) -> CliqueWitness | None:
    deg = _vertex_degrees(c, color)
    need = comb(n - 1, c.uniformity - 1)
    cand = within & mask_of(v for v in range(c.num_vertices) if deg[v] >= need)
    if cand.bit_count() < n:
        return None
    found = _cliques.has_clique(color_links(c, color), c.uniformity, cand, n, budget)
    return CliqueWitness(tuple(found), color) if found else None


def _search_color_job(args):
    c, color, n, limit = args
    return _search_color(c, color, n, Budget(limit), (1 << c.num_vertices) - 1)


def color_order(c: SetColoring) -> list[int]:
    """Colors by descending class size, ties broken by index."""
    sizes = c.class_sizes()
    return sorted(range(c.num_colors), key=lambda i: (-sizes[i], i))


def find_mono_clique(
    c: SetColoring,
    n: int,
    *,
    budget: int | Budget | None = None,
    vertices: Iterable[int] | None = None,
    threads: int = 1,
) -> CliqueWitness | None:
    """Exhaustively look for ``n`` vertices whose edges share a color.

    Colors are tried densest first; within a color the lexicographically
    least clique is returned. Raises :class:`BudgetExceeded` if the node
    budget runs out before the question is settled.
    """
    if n < c.uniformity:
        raise ValueError(f"clique size {n} is below uniformity {c.uniformity}")
    order = color_order(c)
    if threads > 1 and vertices is None:
        limit = budget.limit if isinstance(budget, Budget) else budget
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_search_color_job, [(c, i, n, limit) for i in order]))
        return next((w for w in results if w is not None), None)
    if not isinstance(budget, Budget):
        budget = Budget(budget)
    within = _vertex_mask(c, vertices)
    for color in order:
        w = _search_color(c, color, n, budget, within)
        if w is not None:
            return w
    return None


def max_color_clique(
    c: SetColoring,
    color: int,
    *,
    vertices: Iterable[int] | None = None,
    cap: int | None = None,
    budget: int | Budget | None = None,
) -> tuple[int, ...]:
    """A maximum clique in ``color``, or the first clique of size ``cap`` if one exists."""
    if not 0 <= color < c.num_colors:
        raise ValueError(f"color {color} outside palette of {c.num_colors}")
    if not isinstance(budget, Budget):
        budget = Budget(budget)
    within = _vertex_mask(c, vertices)
    return tuple(_cliques.search(color_links(c, color), c.uniformity, within, target=cap, budget=budget))


def clique_number_of_color(
    c: SetColoring,
    color: int,
    vertices: Iterable[int] | None = None,
    *,
    budget: int | Budget | None = None,
) -> int:
    """Size of the largest vertex set (optionally inside ``vertices``) monochromatic in ``color``."""
    return len(max_color_clique(c, color, vertices=vertices, budget=budget))


def is_witness(c: SetColoring, w: CliqueWitness) -> bool:
    """Plain re-check of a witness by walking its edges."""
    bit = 1 << w.color
    return len(set(w.vertices)) == len(w.vertices) and all(
        c.mask(e) & bit for e in combinations(sorted(w.vertices), c.uniformity)
    )


def trim_to_exact(c: SetColoring) -> SetColoring:
    """Keep the ``colors_per_edge`` smallest colors of every edge."""
    s = c.colors_per_edge
    out = []
    for edge, m in c.items():
        if m.bit_count() < s:
            raise ValueError(f"edge {edge} has {m.bit_count()} colors, fewer than {s}")
        out.append(_smallest_colors(m, s))
    return SetColoring(c.uniformity, c.num_vertices, c.num_colors, s, tuple(out), slack=False)


def duplicate_colors(c: SetColoring, t: int) -> SetColoring:
    """Replace color ``i`` by the block ``t*i, ..., t*i + t - 1``."""
    if t < 1:
        raise ValueError("duplication factor must be >= 1")
    if t * c.num_colors > MAX_COLORS:
        raise ValueError(f"duplicated palette {t * c.num_colors} exceeds {MAX_COLORS}")
    block = (1 << t) - 1
    masks = tuple(sum(block << (t * i) for i in _cliques.bits(m)) for m in c.masks)
    return SetColoring(c.uniformity, c.num_vertices, t * c.num_colors, t * c.colors_per_edge, masks, c.slack)


def delete_color(c: SetColoring, dropped: int) -> SetColoring:
    """Remove one color from every edge: ``dropped`` where present, else the largest.

    Surviving colors are renumbered to 0..r-2 in their original order.
    """
    if c.colors_per_edge < 2:
        raise ValueError("cannot delete a color when edges carry a single color")
    if not 0 <= dropped < c.num_colors:
        raise ValueError(f"color {dropped} outside palette of {c.num_colors}")
    bit = 1 << dropped
    low = bit - 1
    out = []
    for m in c.masks:
        m = m ^ bit if m & bit else m ^ (1 << (m.bit_length() - 1))
        out.append((m & low) | ((m >> 1) & ~low))
    return SetColoring(c.uniformity, c.num_vertices, c.num_colors - 1, c.colors_per_edge - 1, tuple(out), c.slack)
