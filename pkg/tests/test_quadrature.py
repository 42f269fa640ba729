import math

import numpy as np
import pytest

from landen_quartic import quadrature as qd
from landen_quartic.errors import AccuracyError, DomainError
from landen_quartic.exact import quartic_value
from landen_quartic.landen_symbolic import quartic_Q1


def test_gauss_nodes_match_legendre():
    x, w = np.polynomial.legendre.leggauss(7)
    order = np.argsort(-x)
    gauss_nodes = [qd._XGK[i] for i in (1, 3, 5, 7)]
    assert np.allclose(sorted(gauss_nodes, reverse=True)[:4], x[order][:4], atol=1e-15)
    assert np.allclose(qd._WG, w[order][:4], atol=1e-15)


@pytest.mark.parametrize("degree", range(0, 23))
def test_kronrod_exact_for_polynomials(degree):
    value, _, _ = qd.gk15(lambda t: t**degree, -1.0, 1.0)
    expected = 0.0 if degree % 2 else 2.0 / (degree + 1)
    assert value == pytest.approx(expected, abs=1e-14)


def test_gauss_part_exact_to_degree_13():
    # the error estimate is the Kronrod-Gauss gap, so it vanishes up to degree 13
    _, err13, _ = qd.gk15(lambda t: t**12 + t**13, -1.0, 1.0)
    _, err14, _ = qd.gk15(lambda t: t**14, -1.0, 1.0)
    assert err13 < 1e-14 < err14


def test_arctangent():
    value, err = qd.integrate(qd.IntegrandSpec(lambda x: 1 / (1 + x * x), qd.HalfLine(), 1e-12))
    assert value == pytest.approx(math.pi / 2, rel=1e-12)
    assert err <= 1e-12 * value


def test_whole_line_and_finite():
    assert qd.quad(lambda x: math.exp(-x * x), qd.WholeLine()) == pytest.approx(math.sqrt(math.pi), rel=1e-12)
    assert qd.quad(math.sin, qd.Finite(0, math.pi)) == pytest.approx(2.0, rel=1e-13)
    assert qd.quad(lambda x: 1 / (x * x - x + 1), qd.WholeLine()) == pytest.approx(
        2 * math.pi / math.sqrt(3), rel=1e-12)


def test_quartic_by_quadrature():
    assert qd.quad(lambda x: 1 / (x**4 + 2 * x**2 + 1)) == pytest.approx(math.pi / 4, rel=1e-12)
    assert qd.quartic_by_quadrature(2, 3) == pytest.approx(quartic_value(2, 3), rel=1e-10)
    assert qd.quartic_by_quadrature(0.5, 3) == pytest.approx(quartic_value(0.5, 3), rel=1e-10)


def test_error_estimate_is_honest():
    # halving the budget of a converged integral changes it by less than its estimate
    f = qd.quartic_integrand(0.7, 4)
    v1, e1 = qd.integrate(qd.IntegrandSpec(f, qd.HalfLine(), 1e-8))
    v2, _ = qd.integrate(qd.IntegrandSpec(f, qd.HalfLine(), 1e-13))
    assert abs(v1 - v2) <= e1


def test_cap_doubling_is_stable():
    f = qd.quartic_integrand(10.0, 6)
    spec = qd.IntegrandSpec(f, qd.HalfLine(), 1e-12)
    v1, e1 = qd.integrate(spec, cap=2**10)
    v2, _ = qd.integrate(spec, cap=2**11)
    assert abs(v1 - v2) <= e1


def test_accuracy_error_on_small_cap():
    spec = qd.IntegrandSpec(lambda x: 1 / math.sqrt(x) if x > 0 else 0.0, qd.Finite(0, 1), 1e-14)
    with pytest.raises(AccuracyError):
        qd.integrate(spec, cap=8)


def test_non_finite_sample_is_domain_error():
    with pytest.raises(DomainError):
        qd.quad(lambda x: 1 / (x - 0.5) if x != 0.5 else math.inf, qd.Finite(0, 1))
    with pytest.raises(DomainError):
        qd.quad(lambda x: math.nan, qd.Finite(0, 1))


@pytest.mark.parametrize("a, m, j", [(1, 0, 1), (0.5, 2, 3), (3, 4, 7), (0.2, 3, 5)])
def test_vanishing_odd(a, m, j):
    assert abs(qd.check_vanishing_odd(a, m, j)) <= 1e-10


def test_vanishing_even_does_not_vanish():
    # the same integrand with an even power is strictly positive
    with pytest.raises(DomainError):
        qd.check_vanishing_odd(1, 2, 2)


@pytest.mark.parametrize("a, m", [(1, 1), (2, 2), (1, 5)])
def test_ramanujan(a, m):
    lhs, rhs = qd.check_ramanujan(a, m)
    assert abs(lhs - rhs) <= 1e-6 * abs(rhs)


def test_gh_derivative():
    lhs, rhs = qd.check_gh_derivative(1, 0)
    assert lhs == pytest.approx(math.pi / 4, rel=1e-12)
    assert rhs == pytest.approx(math.pi / 4, rel=1e-15)
    for a, c in [(0.5, 3), (2, 0.1)]:
        lhs, rhs = qd.check_gh_derivative(a, c)
        assert abs(lhs - rhs) <= 1e-9 * rhs


@pytest.mark.parametrize("a", [0.5, 1, 2, 10])
@pytest.mark.parametrize("m", range(7))
def test_landen_image_has_same_integral(a, m):
    q1 = quartic_Q1(a, m).float_evaluator()
    assert qd.quad(q1, rel_tol=1e-13) == pytest.approx(qd.quartic_by_quadrature(a, m), rel=1e-10)
