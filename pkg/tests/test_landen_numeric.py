import math
import random

import pytest

from landen_quartic import landen_numeric as ln
from landen_quartic.errors import DivergenceError, DomainError, SingularStepError
from landen_quartic.quadrature import Finite, WholeLine, quad
from landen_quartic.verify import random_state2, random_state6


def G_by_quadrature(a, b):
    return quad(lambda t: 1 / math.sqrt((a * math.cos(t)) ** 2 + (b * math.sin(t)) ** 2),
                Finite(0, math.pi / 2), rel_tol=1e-13)


def quad2(s):
    return quad(lambda x: 1 / ((s.a * x + s.b) * x + s.c), WholeLine(), rel_tol=1e-13)


def test_agm_fixed_points():
    assert ln.agm(1, 1) == 1
    assert ln.agm(2.5, 2.5) == 2.5


def test_agm_against_integral():
    L = ln.agm(1, 2)
    assert G_by_quadrature(1, 2) == pytest.approx(math.pi / (2 * L), rel=1e-10)


def test_agm_quadratic_contraction():
    for a, b in [(1, 2), (1, 100), (0.01, 3)]:
        pairs = ln.agm_sequence(a, b)
        for (x0, y0), (x1, y1) in zip(pairs, pairs[1:]):
            assert abs(x1 - y1) <= (x0 - y0) ** 2 / (8 * min(x0, y0)) * (1 + 1e-12) + 1e-15


def test_agm_domain():
    with pytest.raises(DomainError):
        ln.agm(0, 1)
    with pytest.raises(DomainError):
        ln.agm(1, -2)


def test_elliptic_G():
    assert ln.elliptic_G(1, 1) == pytest.approx(math.pi / 2, rel=1e-15)
    assert ln.elliptic_G(2, 2) == pytest.approx(math.pi / 4, rel=1e-15)
    for a, b in [(1, 3), (2, 5)]:
        assert ln.elliptic_G(a, b) == pytest.approx(G_by_quadrature(a, b), rel=1e-10)


def test_step2_fixed_points():
    assert ln.landen_step2(ln.LandenState2(1, 0, 1)) == ln.LandenState2(1, 0, 1)
    for s in (0.3, 2.0, 17.0):
        out = ln.landen_step2(ln.LandenState2(s, 0, s))
        assert out.a == pytest.approx(s) and out.b == 0 and out.c == pytest.approx(s)


def test_step2_invariance_example():
    s = ln.LandenState2(2, 1, 3)
    assert quad2(ln.landen_step2(s)) == pytest.approx(quad2(s), rel=1e-12)


def test_step2_invariance_random():
    rng = random.Random(1)
    for _ in range(30):
        s = random_state2(rng)
        assert abs(quad2(ln.landen_step2(s)) - quad2(s)) <= 1e-10 * quad2(s)


def test_step2_singular():
    # (3a+c)(a+3c) = b^2 with a = c = 1 means b = 4
    with pytest.raises(SingularStepError):
        ln.landen_step2(ln.LandenState2(1, 4, 1))


def test_iterate2_examples():
    v, rep = ln.landen_iterate2(1, 0, 1)
    assert v == pytest.approx(math.pi) and rep.iterations == 0
    v, rep = ln.landen_iterate2(1, 1, 1)
    assert abs(v - 2 * math.pi / math.sqrt(3)) <= 1e-12
    assert 2.7 <= rep.estimated_order <= 3.3
    v, _ = ln.landen_iterate2(5, 2, 1)
    assert v == pytest.approx(math.pi / 2, rel=1e-12)
    assert v == pytest.approx(quad2(ln.LandenState2(5, 2, 1)), rel=1e-11)


@pytest.mark.parametrize("abc", [(1, 0.5, 2), (0.2, 0.1, 0.3), (4, -3, 1), (1, 1.99, 1), (100, 1, 0.01)])
def test_iterate2_limit_grid(abc):
    a, b, c = abc
    v, rep = ln.landen_iterate2(a, b, c)
    assert v == pytest.approx(2 * math.pi / math.sqrt(4 * a * c - b * b), rel=1e-12)
    assert rep.converged and rep.error_trace[-1] < 1e-12


def test_iterate2_domain():
    with pytest.raises(DomainError):
        ln.landen_iterate2(1, 2, 1)


def test_estimate_order_constructed():
    assert ln.estimate_order([1e-1, 1e-3, 1e-9, 1e-27]) == pytest.approx(3.0)
    assert ln.estimate_order([1e-1, 1e-2, 1e-4, 1e-8]) == pytest.approx(2.0)
    with pytest.raises(ValueError):
        ln.estimate_order([1e-1, 1e-3, 1e-9])
    with pytest.raises(ValueError):
        ln.estimate_order([1e-1, 1e-3, 1e-3, 1e-9])
    with pytest.raises(ValueError):
        ln.estimate_order([1e-1, 0, 1e-3, 1e-9])


def test_step6_fixed_point_corrected():
    out = ln.landen_step6(ln.LandenState6(3, 3, 1, 2, 1))
    assert out.a == pytest.approx(3, rel=1e-15) and out.b == pytest.approx(3, rel=1e-15)
    assert (out.c, out.d, out.e) == pytest.approx((1, 2, 1), rel=1e-15)


def test_step6_fixed_point_printed_fails():
    out = ln.landen_step6(ln.LandenState6(3, 3, 1, 2, 1), printed_d_map=True)
    assert out.d == pytest.approx(15 / 8, rel=1e-15)
    assert abs(out.d - 2) > 0.1


def test_step6_invariance_random():
    rng = random.Random(2)
    for _ in range(30):
        s = random_state6(rng)
        u0 = quad(ln.U6_integrand(s), rel_tol=1e-13)
        u1 = quad(ln.U6_integrand(ln.landen_step6(s)), rel_tol=1e-13)
        assert abs(u1 - u0) <= 1e-10 * u0


def test_step6_printed_breaks_invariance():
    rng = random.Random(3)
    broken = 0
    for _ in range(10):
        s = random_state6(rng)
        u0 = quad(ln.U6_integrand(s), rel_tol=1e-13)
        u1 = quad(ln.U6_integrand(ln.landen_step6(s, printed_d_map=True)), rel_tol=1e-13)
        broken += abs(u1 - u0) > 1e-6 * u0
    assert broken == 10  # every state here has c > 0, which the bad term multiplies


def test_step6_domain():
    with pytest.raises(DomainError):
        ln.landen_step6(ln.LandenState6(-2, -1, 1, 1, 1))


def test_iterate6_examples():
    v, rep = ln.landen_iterate6(3, 3, 1, 2, 1)
    assert v == pytest.approx(math.pi / 2, rel=1e-15) and rep.iterations == 0
    v, _ = ln.landen_iterate6(3, 3, 2, 4, 2)
    assert v == pytest.approx(math.pi, rel=1e-15)
    v, rep = ln.landen_iterate6(4, 5, 1, 1, 1)
    u = quad(ln.U6_integrand(ln.LandenState6(4, 5, 1, 1, 1)), rel_tol=1e-13)
    assert v == pytest.approx(u, rel=1e-8)
    assert rep.error_trace[-1] < 1e-12


def test_iterate6_monotone_after_burn_in():
    _, rep = ln.landen_iterate6(10, 1, 2, 3, 4)
    tail = [e for e in rep.error_trace[1:] if e > 1e-14]
    assert all(e1 < e0 for e0, e1 in zip(tail, tail[1:]))


def test_iterate6_rejects_vanishing_denominator():
    # t^3 - 5t^2 + t + 1 is negative at t = 1, so x^6 - 5x^4 + x^2 + 1 has real roots
    assert not ln.sextic_denominator_positive(-5, 1)
    with pytest.raises(DomainError):
        ln.landen_iterate6(-5, 1, 1, 1, 1)
    assert ln.sextic_denominator_positive(3, 3)
    assert ln.sextic_denominator_positive(-1.5, 1)


def test_iterate_cap_is_an_error(monkeypatch):
    monkeypatch.setattr(ln, "MAX_STEPS", 1)
    with pytest.raises(DivergenceError):
        ln.landen_iterate2(1, 1, 1)
    with pytest.raises(DivergenceError):
        ln.landen_iterate6(4, 5, 1, 1, 1)
