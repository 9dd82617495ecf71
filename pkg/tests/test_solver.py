from itertools import product

import pytest

import oracles
from setramsey import BudgetExceeded, ResourceLimitError, StrategyError
from setramsey.bounds import first_moment_lower
from setramsey.coloring import delete_color, duplicate_colors, find_mono_clique, validate
from setramsey.solver import (
    prove_lower,
    replay_exists,
    search_coloring,
    solve_exact,
)


def _certified(res, n):
    w = res.witness
    assert w is not None and w.num_vertices == res.value - 1
    assert validate(w).ok and find_mono_clique(w, n) is None
    assert not oracles.mono_cliques(oracles.edge_table(w), w.num_vertices, 2, n)


def test_classical_triangle_number():
    res = solve_exact(3, 2, 1)
    assert (res.status, res.value, res.certificate) == ("exact", 6, "exhaustive")
    assert res.stats["replay"] == "agrees"
    _certified(res, 3)


def test_affine_value_by_exhaustion():
    res = solve_exact(3, 3, 2, use_turan=False)
    assert (res.status, res.value, res.certificate) == ("exact", 5, "exhaustive")
    _certified(res, 3)
    assert res.stats["searched"][0]["by"] == "affine"


def test_affine_value_by_turan():
    res = solve_exact(3, 3, 2)
    assert (res.value, res.certificate) == (5, "turan")


@pytest.mark.parametrize("n,r,s,value", [(4, 4, 3, 10), (5, 7, 6, 9), (4, 6, 5, 5)])
def test_turan_certified_values(n, r, s, value):
    res = solve_exact(n, r, s)
    assert (res.status, res.value, res.certificate) == ("exact", value, "turan")
    _certified(res, n)


def test_trivial_value():
    res = solve_exact(3, 4, 3)
    assert (res.status, res.value, res.certificate) == ("exact", 3, "trivial")
    assert validate(res.witness).ok


def test_search_finds_pentagon_type_witness():
    c = search_coloring(3, 2, 1, 5)
    assert c is not None and find_mono_clique(c, 3) is None
    assert sorted(c.class_sizes()) == [5, 5]
    assert search_coloring(3, 2, 1, 6) is None


@pytest.mark.parametrize("n,r,s,N", [(3, 2, 1, 5), (3, 2, 1, 6), (3, 3, 2, 4), (3, 3, 2, 5), (4, 3, 2, 5),
                                     (3, 3, 1, 6), (4, 2, 1, 6)])
def test_search_agrees_with_replay(n, r, s, N):
    assert (search_coloring(n, r, s, N) is not None) == replay_exists(n, r, s, N)


def test_budget_gives_unknown_not_a_value():
    res = solve_exact(3, 3, 1, budget=200)
    assert res.status == "unknown" and res.value is None
    with pytest.raises(BudgetExceeded):
        search_coloring(3, 3, 1, 16, budget=100)


def test_max_N_gives_lower_only():
    res = solve_exact(3, 3, 1, max_N=8)
    assert res.status == "lower-only" and res.lower == 9
    assert find_mono_clique(res.witness, 3) is None


def test_solver_input_errors():
    with pytest.raises(ValueError):
        solve_exact(3, 2, 2)
    with pytest.raises(ResourceLimitError):
        solve_exact(3, 30, 10)
    with pytest.raises(ValueError):
        search_coloring(3, 2, 1, 1)


def test_prove_lower_strategies():
    c = prove_lower(4, 4, 3, 9, "affine")
    assert c.num_vertices == 9 and find_mono_clique(c, 4) is None
    assert not oracles.mono_cliques(oracles.edge_table(c), 9, 2, 4)
    assert prove_lower(3, 3, 2, 5, "search") is None
    c = prove_lower(3, 2, 1, 5, "search")
    assert c is not None and find_mono_clique(c, 3) is None
    c = prove_lower(3, 4, 1, 16, "product")
    assert c.num_vertices == 16 and find_mono_clique(c, 3) is None
    c = prove_lower(4, 6, 2, 16, "stepup", k=3)
    assert c.uniformity == 3 and find_mono_clique(c, 4) is None


def test_prove_lower_errors():
    with pytest.raises(StrategyError):
        prove_lower(3, 2, 1, 5, "magic")
    with pytest.raises(StrategyError):
        prove_lower(3, 2, 1, 40, "affine")
    with pytest.raises(StrategyError):
        prove_lower(3, 2, 1, 5, "stepup", k=2)


def test_first_moment_below_search_certificate():
    c = prove_lower(4, 2, 1, 9, "search")
    assert c is not None
    assert first_moment_lower(4, 2, 1).value <= 9


@pytest.mark.parametrize("n,r,s", [(3, 2, 1), (3, 3, 2), (4, 4, 3)])
def test_duplicated_witness_certifies_scaled_parameters(n, r, s):
    res = solve_exact(n, r, s)
    for t in (2, 3):
        d = duplicate_colors(res.witness, t)
        assert (d.num_colors, d.colors_per_edge) == (t * r, t * s)
        assert validate(d).ok and find_mono_clique(d, n) is None


def test_monotonicity_where_both_values_are_known():
    known = {}
    for n, r in product((3, 4), range(2, 6)):
        for s in range(1, r):
            res = solve_exact(n, r, s, max_N=7, budget=200_000, replay_budget=200_000)
            if res.status == "exact":
                known[(n, r, s)] = res.value
    pairs = [(key, (key[0], key[1] - 1, key[2] - 1)) for key in known]
    checked = [(a, b) for a, b in pairs if b in known]
    assert checked
    for a, b in checked:
        assert known[a] <= known[b]


def test_deleting_a_color_from_witnesses():
    res = solve_exact(3, 3, 2)
    d = delete_color(res.witness, 0)
    assert validate(d).ok and find_mono_clique(d, 3) is None


def test_result_json_round_trips_through_json():
    import json
    res = solve_exact(3, 2, 1)
    blob = json.loads(json.dumps(res.to_json()))
    assert blob["value"] == 6 and blob["witness"]["N"] == 5
