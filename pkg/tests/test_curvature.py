import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphricci.corpus import complete_graph, cycle_graph, path_graph, petersen_graph, regular_tree, star_graph
from graphricci.coxeter import bruhat_graph_symmetric
from graphricci.curvature import (
    curvature_matrix,
    delta,
    gamma,
    gamma2,
    gamma2_expanded,
    gamma2_form,
    global_ricci,
    local_ricci,
    local_ricci_oracle,
    no_tri_quad_bounds,
    regular_no_tri_quad_ricci,
    triangle_free_lower_bound,
    triangle_upper_bound,
)
from graphricci.errors import DomainError
from graphricci.graph import Graph, local_neighborhood

from .test_graph import connected_graphs


def test_delta_gamma_small():
    g = path_graph(3)
    f = {"0": 0, "1": 1, "2": 3}
    assert delta(g, f, "1") == 1
    assert gamma(g, f, f, "1") == Fraction(5, 2)


def test_gamma2_needs_radius_two():
    g = path_graph(4)
    with pytest.raises(DomainError, match="'2'"):
        gamma2(g, {"0": 0, "1": 1}, "0")


def test_expanded_needs_zero_at_center():
    with pytest.raises(DomainError):
        gamma2_expanded(cycle_graph(4), {str(i): 1 for i in range(4)}, "0")


@settings(max_examples=100, deadline=None)
@given(connected_graphs(), st.integers(0, 2**32))
def test_gamma2_expansion(g, seed):
    rng = random.Random(seed)
    x = rng.choice(g.vertices)
    f = {v: Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for v in g.vertices}
    f[x] = Fraction(0)
    assert gamma2(g, f, x) == gamma2_expanded(g, f, x)


@settings(max_examples=60, deadline=None)
@given(connected_graphs(), st.integers(-20, 20))
def test_shift_invariance(g, c):
    x = g.vertices[0]
    f = {v: Fraction(i * i - 3 * i, 2) for i, v in enumerate(g.vertices)}
    shifted = {v: val + c for v, val in f.items()}
    assert gamma2(g, shifted, x) == gamma2(g, f, x)
    assert gamma(g, shifted, shifted, x) == gamma(g, f, f, x)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(max_n=8))
def test_oracle_matches_matrix(g):
    for x in g.vertices:
        assert abs(local_ricci(g, x) - local_ricci_oracle(g, x)) <= 1e-9


def test_bruhat_s3_example():
    g = bruhat_graph_symmetric(3)
    m = curvature_matrix(local_neighborhood(g, "1,2,3")).matrix
    assert m.as_strings() == [["8/3", "-1/3", "-1/3"], ["-1/3", "8/3", "-1/3"], ["-1/3", "-1/3", "8/3"]]
    assert global_ricci(g).global_ == pytest.approx(2, abs=1e-12)


@pytest.mark.parametrize("n", range(2, 7))
def test_complete_graph(n):
    assert global_ricci(complete_graph(n)).global_ == pytest.approx(1 + n / 2, abs=1e-9)


def test_known_values():
    assert global_ricci(cycle_graph(3)).global_ == pytest.approx(2.5)
    assert global_ricci(cycle_graph(4)).global_ == pytest.approx(2)
    for n in (5, 6, 9):
        assert global_ricci(cycle_graph(n)).global_ == pytest.approx(0, abs=1e-12)
    k33 = Graph.from_edges((a, b) for a in "abc" for b in "xyz")
    assert global_ricci(k33).global_ == pytest.approx(2)
    assert global_ricci(path_graph(2)).global_ == pytest.approx(2)


def test_triangle_weights_against_oracle():
    # a fan: triangles on a star centre, where the triangle weights matter
    g = Graph.from_edges([("c", "a"), ("c", "b"), ("c", "d"), ("a", "b"), ("b", "d"), ("d", "e")])
    for x in g.vertices:
        assert local_ricci(g, x) == pytest.approx(local_ricci_oracle(g, x), abs=1e-9)


def test_oracle_form_is_symmetric():
    variables, form = gamma2_form(petersen_graph(), "0")
    assert len(variables) == 9
    assert all(form[i][j] == form[j][i] for i in range(9) for j in range(9))


@pytest.mark.parametrize("d", [3, 4, 5])
def test_regular_tree_centre(d):
    assert local_ricci(regular_tree(d, 3), "r") == pytest.approx(2 - d, abs=1e-9)
    assert regular_no_tri_quad_ricci(d) == 2 - d


def test_regular_formula_domain():
    with pytest.raises(DomainError):
        regular_no_tri_quad_ricci(1)


@pytest.mark.parametrize("n", [5, 6, 8])
def test_rotation_invariance(n):
    g = cycle_graph(n)
    rotated = g.relabel({str(i): str((i + 1) % n) for i in range(n)})
    assert global_ricci(rotated).per_vertex == pytest.approx(global_ricci(g).per_vertex)


def test_bounds():
    assert triangle_upper_bound(complete_graph(4)) == 3
    assert triangle_free_lower_bound(star_graph(3)) == 4 - (9 + 1) / 2
    with pytest.raises(DomainError, match="triangle"):
        triangle_free_lower_bound(complete_graph(3))
    with pytest.raises(DomainError, match="4-cycle"):
        no_tri_quad_bounds(cycle_graph(4))
    lo, hi = no_tri_quad_bounds(path_graph(2))
    assert lo <= 2 <= hi


@settings(max_examples=60, deadline=None)
@given(connected_graphs())
def test_bounds_hold(g):
    report = global_ricci(g)
    assert all(b.satisfied for b in report.bounds)


def test_report_oracle_deviation():
    report = global_ricci(petersen_graph(), oracle=True)
    assert report.max_oracle_deviation <= 1e-9
    assert global_ricci(petersen_graph()).max_oracle_deviation is None
