from fractions import Fraction
from itertools import combinations, product

import pytest

import oracles
from setramsey.codes import PartitionFamily, all_words, greedy_gv_code
from setramsey.coloring import find_mono_clique, trim_to_exact, validate
from setramsey.constructions import (
    AffineParams,
    affine_coloring,
    affine_partition_family,
    find_affine_params,
    gaussian_binomial,
    partitions_to_coloring,
    pentagon_coloring,
    product_coloring,
    random_coloring,
    subspaces,
)

AFFINE_GRID = [(2, 2, 1), (2, 3, 1), (2, 3, 2), (3, 2, 1), (2, 4, 1), (2, 4, 2), (4, 2, 1), (3, 3, 1), (5, 2, 1)]


def test_gaussian_binomial_examples():
    assert gaussian_binomial(2, 1, 2) == 3 == len(subspaces(2, 2, 1))
    assert gaussian_binomial(5, 0, 7) == 1
    assert gaussian_binomial(4, 2, 3) == 130 == len(subspaces(3, 4, 2))


@pytest.mark.parametrize("q,d,k", [(2, 3, 1), (2, 3, 2), (2, 4, 2), (3, 3, 1), (4, 2, 1), (4, 3, 2)])
def test_subspace_enumeration_is_complete_and_distinct(q, d, k):
    subs = subspaces(q, d, k)
    assert len(set(subs)) == len(subs) == gaussian_binomial(d, k, q)
    assert all(len(s) == q ** k and 0 in s for s in subs)


@pytest.mark.parametrize("q,d,k", AFFINE_GRID)
def test_affine_family_separates_every_pair_equally(q, d, k):
    p = AffineParams(q, d, k)
    pf = affine_partition_family(p)
    assert pf.num_partitions == p.r
    assert pf.part_counts() == [q ** (d - k)] * p.r
    for u, v in combinations(range(p.N), 2):
        together = sum(row[u] == row[v] for row in pf.assignment)
        assert together == p.r - p.s
    assert p.s_exact == Fraction(p.r) * (1 - Fraction(q ** k - 1, q ** d - 1))


def test_affine_small_families():
    pf = affine_partition_family(AffineParams(2, 2, 1))
    assert pf.num_partitions == 3
    assert all(sorted(row.count(x) for x in set(row)) == [2, 2] for row in pf.assignment)
    pf = affine_partition_family(AffineParams(2, 3, 1))
    assert (pf.num_vertices, pf.num_partitions) == (8, 7)
    assert all(sorted(row.count(x) for x in set(row)) == [2, 2, 2, 2] for row in pf.assignment)


def test_affine_params_fields():
    p = AffineParams(3, 2, 1)
    assert (p.n, p.r, p.s, p.N) == (4, 4, 3, 9)
    p = AffineParams(2, 3, 1)
    assert (p.n, p.r, p.s, p.N) == (5, 7, 6, 8)
    assert find_affine_params(4, 4, 3) == [AffineParams(3, 2, 1)]
    with pytest.raises(ValueError):
        AffineParams(6, 2, 1)
    with pytest.raises(ValueError):
        AffineParams(2, 2, 2)


@pytest.mark.parametrize("q,d,k", AFFINE_GRID)
def test_affine_coloring_has_no_monochromatic_clique(q, d, k):
    p = AffineParams(q, d, k)
    c = affine_coloring(p)
    assert validate(c).ok and not c.slack
    assert (c.num_colors, c.colors_per_edge, c.num_vertices) == (p.r, p.s, p.N)
    assert find_mono_clique(c, p.n) is None


def test_affine_k4_classes_are_k22():
    c = affine_coloring(AffineParams(2, 2, 1))
    assert c.class_sizes() == [4, 4, 4]
    table = oracles.edge_table(c)
    assert not oracles.mono_cliques(table, 4, 2, 3)


def test_affine_k9_checked_on_every_four_set():
    c = affine_coloring(AffineParams(3, 2, 1))
    assert (c.num_colors, c.colors_per_edge) == (4, 3)
    table = oracles.edge_table(c)
    assert sum(1 for _ in combinations(range(9), 4)) == 126
    assert not oracles.mono_cliques(table, 9, 2, 4)


def test_singleton_partition_gives_monochrome():
    c = partitions_to_coloring(PartitionFamily(4, 1, 4, ((0, 1, 2, 3),)))
    assert all(c.colors(e) == (0,) for e in c.edges())


def test_partitions_must_separate_every_pair():
    with pytest.raises(ValueError):
        partitions_to_coloring(PartitionFamily(3, 1, 2, ((0, 0, 1),)))


def test_product_identity_case():
    base = pentagon_coloring()
    c = product_coloring(base, all_words(5, 1))
    assert [c.colors(e) for e in c.edges()] == [base.colors(e) for e in base.edges()]


def test_pentagon_square_product():
    c = product_coloring(pentagon_coloring(), all_words(5, 2))
    assert (c.num_vertices, c.num_colors, c.colors_per_edge) == (25, 4, 1)
    assert validate(c).ok
    assert find_mono_clique(c, 3) is None
    assert not oracles.mono_cliques(oracles.edge_table(c), 25, 2, 3)
    t = trim_to_exact(c)
    assert validate(t).ok and find_mono_clique(t, 3) is None


@pytest.mark.parametrize("base_params,m,d", [((2, 2, 1), 2, 1), ((2, 2, 1), 3, 2), ((3, 2, 1), 2, 2)])
def test_product_color_counts(base_params, m, d):
    p = AffineParams(*base_params)
    base = affine_coloring(p)
    code = greedy_gv_code(base.num_vertices, m, d)
    c = product_coloring(base, code)
    for (u, v) in c.edges():
        dist = oracles.distance(code.words[u], code.words[v])
        assert len(c.colors((u, v))) == base.colors_per_edge * dist
        # flattened color i*a + c records coordinate i and base color c
        for col in c.colors((u, v)):
            i, base_col = divmod(col, base.num_colors)
            x, y = sorted((code.words[u][i], code.words[v][i]))
            assert base_col in base.colors((x, y))
    assert find_mono_clique(c, p.n) is None


def test_product_rejects_mismatched_code():
    with pytest.raises(ValueError):
        product_coloring(pentagon_coloring(), all_words(4, 2))


def test_random_coloring_is_reproducible():
    a = random_coloring(12, 5, 2, seed=3)
    b = random_coloring(12, 5, 2, seed=3)
    assert a == b and validate(a).ok
    assert random_coloring(12, 5, 2, seed=4) != a


def test_find_affine_params_matches_definition():
    for q, d, k in AFFINE_GRID:
        p = AffineParams(q, d, k)
        assert p in find_affine_params(p.n, p.r, p.s)
    for n, r, s in product(range(3, 6), range(2, 8), range(1, 7)):
        for p in find_affine_params(n, r, s):
            assert (p.n, p.r, p.s) == (n, r, s)
