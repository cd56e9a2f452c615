import math

import numpy as np
import pytest

from graphricci import coxeter as cx
from graphricci.corpus import complete_graph, cycle_graph, path_graph, petersen_graph
from graphricci.errors import DomainError, ResourceError
from graphricci.graph import Graph
from graphricci.spectral import (
    boundary_size,
    cayley_gap_lower_bound,
    check_gap_vs_curvature,
    coxeter_isoperimetric_coefficient,
    isoperimetric_rhs,
    laplacian,
    spectral_profile,
    verify_isoperimetry,
)


def test_laplacian_rows_sum_to_zero():
    lap = laplacian(petersen_graph())
    assert np.allclose(lap.sum(axis=1), 0)


@pytest.mark.parametrize("n", [3, 5, 8])
def test_cycle_gap(n):
    assert spectral_profile(cycle_graph(n)).spectral_gap == pytest.approx(2 - 2 * math.cos(2 * math.pi / n))


def test_complete_gap_and_diameter():
    prof = spectral_profile(complete_graph(5))
    assert prof.spectral_gap == pytest.approx(5)
    assert prof.diameter == 1


def test_disconnected():
    g = Graph.from_edges([("a", "b"), ("c", "d")])
    with pytest.raises(DomainError):
        spectral_profile(g)


def test_gap_vs_curvature():
    assert check_gap_vs_curvature(complete_graph(4)).status == "pass"
    assert check_gap_vs_curvature(cycle_graph(7)).status == "not applicable"


def test_boundary_size():
    g = cycle_graph(6)
    assert boundary_size(g, {"0", "1", "2"}) == 2
    assert boundary_size(g, set()) == 0
    with pytest.raises(KeyError):
        boundary_size(g, {"zz"})


def test_isoperimetric_rhs():
    assert isoperimetric_rhs(4.0, 2.0, 2, 4) == pytest.approx(0.5 * min(2, 4 / 2) * 2 * 0.5)
    with pytest.raises(DomainError):
        isoperimetric_rhs(1.0, 0.0, 1, 2)
    with pytest.raises(DomainError):
        isoperimetric_rhs(0.0, 1.0, 1, 2)
    with pytest.raises(DomainError):
        isoperimetric_rhs(1.0, 1.0, 3, 2)


def test_exhaustive_isoperimetry():
    v = verify_isoperimetry(complete_graph(5))
    assert v.status == "pass" and v.mode == "exhaustive" and v.checked == 32
    assert verify_isoperimetry(cycle_graph(6)).status == "not applicable"


def test_exhaustive_cap():
    g = path_graph(15)
    with pytest.raises(ResourceError):
        verify_isoperimetry(g, mode="exhaustive")


def test_sampled_is_seeded():
    g = cx.weak_order_graph(cx.model_for(cx.parse_tag("A3")[0]))
    a = verify_isoperimetry(g, seed=3, samples=2000)
    b = verify_isoperimetry(g, seed=3, samples=2000)
    assert a.mode == "sampled" and a.checked == 2000
    assert a == b and a.status == "pass"


def test_cayley_bound():
    g = cx.weak_order_graph(cx.model_for(cx.parse_tag("B3")[0]))
    prof = spectral_profile(g)
    assert prof.diameter == 9
    assert prof.spectral_gap >= cayley_gap_lower_bound(len(g), 3, prof.diameter)
    assert cayley_gap_lower_bound(10, 10, 10**6) == 0.0
    with pytest.raises(DomainError):
        cayley_gap_lower_bound(0, 2, 2)


def test_coxeter_coefficient_branches():
    c, log_c = coxeter_isoperimetric_coefficient(24, 3, 6, -1.0)
    lam = 24 / (6 * 3**6)
    assert c == pytest.approx(0.5 * lam / math.sqrt(2))
    assert log_c == pytest.approx(math.log10(c))
    c, _ = coxeter_isoperimetric_coefficient(10, 2, 5, 0.0)
    assert c == pytest.approx(0.5 * math.sqrt(10 / (5 * 2**5)))
    _, log_c = coxeter_isoperimetric_coefficient(696729600, 8, 120, -2.34)
    assert math.isfinite(log_c) and log_c < -100
