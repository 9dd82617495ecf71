from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from strategies import colorings
from setramsey import BudgetExceeded
from setramsey.coloring import (
    CliqueWitness,
    SetColoring,
    clique_number_of_color,
    colex_rank,
    colex_subsets,
    color_order,
    delete_color,
    duplicate_colors,
    find_mono_clique,
    is_witness,
    mask_of,
    trim_to_exact,
    validate,
)
from setramsey.constructions import AffineParams, affine_coloring, pentagon_coloring


def test_colex_ranks_follow_enumeration_order():
    for N, k in [(6, 2), (7, 3), (6, 4)]:
        subsets = list(colex_subsets(N, k))
        assert [colex_rank(e) for e in subsets] == list(range(comb(N, k)))
        assert sorted(subsets) == sorted(combinations(range(N), k))


def test_constant_coloring_is_valid():
    assert validate(SetColoring.constant(2, 3, 2, [0])).ok


def test_oversized_color_set_is_reported_at_its_edge():
    masks = [0b01, 0b11, 0b01]
    report = validate(SetColoring(2, 3, 2, 1, tuple(masks)))
    assert [edge for edge, _ in report.violations] == [(0, 2)]


def test_slack_allows_extra_colors_but_not_fewer():
    ok = SetColoring(2, 3, 3, 2, (0b011, 0b111, 0b110), slack=True)
    assert validate(ok).ok
    short = SetColoring(2, 3, 3, 2, (0b011, 0b001, 0b110), slack=True)
    assert not validate(short).ok


def test_palette_range_is_checked():
    bad = SetColoring(2, 3, 2, 1, (0b001, 0b100, 0b010))
    assert not validate(bad).ok


def test_structural_errors():
    with pytest.raises(ValueError):
        SetColoring(2, 3, 2, 1, (1, 1))
    with pytest.raises(ValueError):
        SetColoring(2, 3, 129, 1, (1, 1, 1))
    with pytest.raises(ValueError):
        SetColoring(2, 1, 2, 1, ())


def test_monochrome_graph_has_full_witness():
    c = SetColoring.constant(2, 4, 2, [0])
    assert find_mono_clique(c, 4) == CliqueWitness((0, 1, 2, 3), 0)


def test_pentagon_has_no_monochromatic_triangle():
    c = pentagon_coloring()
    assert find_mono_clique(c, 3) is None
    assert not oracles.mono_cliques(oracles.edge_table(c), 5, 2, 3)


def test_affine_k4_has_no_monochromatic_triangle():
    c = affine_coloring(AffineParams(2, 2, 1))
    assert find_mono_clique(c, 3) is None
    assert [clique_number_of_color(c, i) for i in range(3)] == [2, 2, 2]


def test_clique_number_examples():
    mono = SetColoring.constant(2, 4, 2, [0])
    assert clique_number_of_color(mono, 0) == 4
    assert clique_number_of_color(mono, 1) == 1
    hyper = SetColoring.constant(3, 5, 2, [1])
    assert clique_number_of_color(hyper, 0) == 2
    assert clique_number_of_color(hyper, 1, vertices=[0, 2, 4]) == 3


def test_query_below_uniformity_is_rejected():
    with pytest.raises(ValueError):
        find_mono_clique(SetColoring.constant(3, 4, 1, [0]), 2)


def test_budget_exhaustion_is_an_error_not_an_answer():
    c = affine_coloring(AffineParams(2, 3, 1))
    with pytest.raises(BudgetExceeded):
        find_mono_clique(c, 5, budget=3)


def test_threads_give_the_serial_answer():
    c = SetColoring.from_function(2, 9, 3, 1, lambda e: [(e[0] * e[1] + e[0]) % 3])
    for n in (3, 4):
        assert find_mono_clique(c, n, threads=2) == find_mono_clique(c, n)


def test_trim_keeps_smallest_colors():
    c = SetColoring(2, 2, 5, 2, (mask_of([1, 3, 4]),), slack=True)
    assert trim_to_exact(c).colors((0, 1)) == (1, 3)
    exact = pentagon_coloring()
    assert trim_to_exact(exact) == exact


def test_trim_rejects_short_edges():
    with pytest.raises(ValueError):
        trim_to_exact(SetColoring(2, 2, 3, 2, (0b001,), slack=True))


def test_duplicate_identity_and_pentagon():
    c = pentagon_coloring()
    assert duplicate_colors(c, 1) == c
    d = duplicate_colors(c, 2)
    assert (d.num_colors, d.colors_per_edge) == (4, 2)
    assert validate(d).ok and find_mono_clique(d, 3) is None


def test_duplicate_maps_color_blocks():
    mono = SetColoring.constant(2, 3, 1, [0])
    d = duplicate_colors(mono, 3)
    assert d.colors((0, 2)) == (0, 1, 2)
    w = find_mono_clique(d, 3)
    assert w is not None and w.color in (0, 1, 2)


def test_delete_color_on_affine_k4():
    c = delete_color(affine_coloring(AffineParams(2, 2, 1)), 2)
    assert (c.num_colors, c.colors_per_edge) == (2, 1)
    assert validate(c).ok and find_mono_clique(c, 3) is None


def test_delete_color_present_everywhere_drops_that_column():
    c = SetColoring.from_function(2, 4, 4, 2, lambda e: [1, 2 + (e[0] + e[1]) % 2])
    d = delete_color(c, 1)
    for e in d.edges():
        assert d.colors(e) == (1 + (e[0] + e[1]) % 2,)


def test_delete_color_needs_two_colors_per_edge():
    with pytest.raises(ValueError):
        delete_color(pentagon_coloring(), 0)


def test_color_order_is_by_class_size():
    c = SetColoring.from_function(2, 4, 3, 1, lambda e: [2] if e[0] == 0 else [1])
    assert color_order(c) == [1, 2, 0]


def test_induced_relabels_in_given_order():
    c = pentagon_coloring()
    sub = c.induced([4, 0, 2])
    assert sub.colors((0, 1)) == c.colors((0, 4))


@settings(max_examples=60, deadline=None)
@given(colorings())
def test_double_counting(c):
    assert sum(c.class_sizes()) == c.colors_per_edge * comb(c.num_vertices, c.uniformity)


@settings(max_examples=60, deadline=None)
@given(colorings(), st.integers(2, 5))
def test_search_agrees_with_brute_force(c, n):
    n = max(n, c.uniformity)
    table = oracles.edge_table(c)
    w = find_mono_clique(c, n)
    assert (w is not None) == oracles.has_mono_clique(table, c.num_vertices, c.uniformity, n)
    if w is not None:
        assert is_witness(c, w) and len(w.vertices) == n
    omegas = [clique_number_of_color(c, i) for i in range(c.num_colors)]
    assert (w is None) == all(om < n for om in omegas)
    for i in range(c.num_colors):
        assert omegas[i] == oracles.clique_number(table, c.num_vertices, c.uniformity, i)


@settings(max_examples=40, deadline=None)
@given(colorings(), st.integers(2, 5), st.integers(1, 3))
def test_duplication_preserves_witness_existence(c, n, t):
    n = max(n, c.uniformity)
    d = duplicate_colors(c, t)
    assert validate(d).ok
    assert (find_mono_clique(d, n) is None) == (find_mono_clique(c, n) is None)


@settings(max_examples=40, deadline=None)
@given(colorings(), st.integers(2, 5), st.data())
def test_deletion_never_creates_a_witness(c, n, data):
    if c.colors_per_edge < 2:
        return
    n = max(n, c.uniformity)
    dropped = data.draw(st.integers(0, c.num_colors - 1))
    d = delete_color(c, dropped)
    assert validate(d).ok
    if find_mono_clique(c, n) is None:
        assert find_mono_clique(d, n) is None


@settings(max_examples=40, deadline=None)
@given(colorings(slack=True))
def test_trim_output_is_a_subset(c):
    t = trim_to_exact(c)
    assert validate(t).ok
    for a, b in zip(c.masks, t.masks):
        assert b & ~a == 0
