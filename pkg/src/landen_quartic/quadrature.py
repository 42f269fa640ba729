"""Adaptive Gauss-Kronrod quadrature and the integral identities it checks.

The integrator is deliberately self-contained: it is the numerical oracle
every closed form in the package is compared against, so it must not share
code with any of them.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Callable, Union

from .errors import AccuracyError, DomainError
from .exact import binomial, quartic_value

# 15-point Kronrod extension of the 7-point Gauss-Legendre rule on [-1, 1].
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
# Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)

_EPS = 2.220446049250313e-16
MAX_SUBINTERVALS = 2**20


@dataclass(frozen=True)
class Finite:
    lo: float
    hi: float


@dataclass(frozen=True)
class HalfLine:
    """The interval [0, oo)."""


@dataclass(frozen=True)
class WholeLine:
    """The real line (-oo, oo)."""


Domain = Union[Finite, HalfLine, WholeLine]


@dataclass
class IntegrandSpec:
    evaluator: Callable[[float], float]
    domain: Domain = field(default_factory=HalfLine)
    target_rel_tol: float = 1e-12
    abs_tol: float = 0.0


def _sample(f, x: float) -> float:
    y = f(x)
    if not math.isfinite(y):
        raise DomainError(f"integrand is not finite at x={x!r}: {y!r}")
    return y


def gk15(f: Callable[[float], float], a: float, b: float) -> tuple[float, float, float]:
    """One Gauss-Kronrod 7/15 panel on [a, b].

    Returns (kronrod estimate, error estimate, roundoff floor). The error is
    the raw Kronrod-Gauss gap, never below the floor.
    """
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fc = _sample(f, center)
    res_k = fc * _WGK[7]
    res_g = fc * _WG[3]
    res_abs = abs(res_k)
    for i in range(7):
        dx = half * _XGK[i]
        f1 = _sample(f, center - dx)
        f2 = _sample(f, center + dx)
        res_k += _WGK[i] * (f1 + f2)
        res_abs += _WGK[i] * (abs(f1) + abs(f2))
        if i % 2 == 1:
            res_g += _WG[i // 2] * (f1 + f2)
    res_k *= half
    res_g *= half
    res_abs *= abs(half)
    floor = 50 * _EPS * res_abs
    return res_k, max(abs(res_k - res_g), floor), floor


def _adaptive(f, a: float, b: float, rel_tol: float, abs_tol: float, cap: int) -> tuple[float, float]:
    value, err, floor = gk15(f, a, b)
    heap = [(-err, a, b, value, floor)]
    total, total_err = value, err
    n = 1
    while total_err > max(abs_tol, rel_tol * abs(total)):
        if n >= cap:
            raise AccuracyError(
                f"quadrature stalled at {n} subintervals: value={total!r}, error estimate={total_err!r}"
            )
        neg_err, lo, hi, v, floor = heapq.heappop(heap)
        if -neg_err <= floor:
            raise AccuracyError(
                f"roundoff limits accuracy: value={total!r}, error estimate={total_err!r}"
            )
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            raise AccuracyError(f"interval [{lo}, {hi}] cannot be bisected further")
        v1, e1, r1 = gk15(f, lo, mid)
        v2, e2, r2 = gk15(f, mid, hi)
        heapq.heappush(heap, (-e1, lo, mid, v1, r1))
        heapq.heappush(heap, (-e2, mid, hi, v2, r2))
        total += v1 + v2 - v
        total_err += e1 + e2 + neg_err
        n += 1
    # recompute the sum from scratch to shed accumulated update roundoff
    total = math.fsum(item[3] for item in heap)
    total_err = math.fsum(-item[0] for item in heap)
    return total, total_err


def _half_line_map(f):
    """x = t / (1 - t) sends (0, 1) onto (0, oo)."""

    def g(t: float) -> float:
        s = 1.0 - t
        return f(t / s) / (s * s)

    return g


def integrate(spec: IntegrandSpec, cap: int = MAX_SUBINTERVALS) -> tuple[float, float]:
    """Integrate ``spec.evaluator`` over ``spec.domain``.

    Returns ``(value, error_estimate)`` with
    ``error_estimate <= max(abs_tol, target_rel_tol * |value|)``.
    """
    f = spec.evaluator
    rtol, atol = spec.target_rel_tol, spec.abs_tol
    dom = spec.domain
    if isinstance(dom, Finite):
        if not dom.lo < dom.hi:
            raise DomainError(f"empty interval [{dom.lo}, {dom.hi}]")
        return _adaptive(f, dom.lo, dom.hi, rtol, atol, cap)
    if isinstance(dom, HalfLine):
        return _adaptive(_half_line_map(f), 0.0, 1.0, rtol, atol, cap)
    if isinstance(dom, WholeLine):
        g = _half_line_map(f)
        h = _half_line_map(lambda x: f(-x))

        def both(t: float) -> float:
            return g(t) + h(t)

        return _adaptive(both, 0.0, 1.0, rtol, atol, cap)
    raise TypeError(f"unknown domain {dom!r}")


def quad(f, domain: Domain | None = None, rel_tol: float = 1e-12, abs_tol: float = 0.0) -> float:
    """Value-only shorthand for :func:`integrate`."""
    spec = IntegrandSpec(f, HalfLine() if domain is None else domain, rel_tol, abs_tol)
    return integrate(spec)[0]


def quartic_integrand(a: float, m: int) -> Callable[[float], float]:
    def q(x: float) -> float:
        x2 = x * x
        return (x2 * x2 + 2 * a * x2 + 1) ** -(m + 1)

    return q


def quartic_by_quadrature(a: float, m: int, rel_tol: float = 1e-13) -> float:
    if a <= -1:
        raise DomainError(f"the quartic integral needs a > -1, got a={a}")
    return quad(quartic_integrand(a, m), rel_tol=rel_tol)


# identity checks

def check_vanishing_odd(a: float, m: int, j: int) -> float:
    """int_0^pi [(1+a) + (1-a) cos^2 u]^-(m+1) cos^j u du, which is 0 for odd j."""
    if a <= -1:
        raise DomainError(f"need a > -1, got a={a}")
    if j % 2 != 1 or not 0 <= j <= 2 * m + 1:
        raise DomainError(f"j must be odd with 0 <= j <= 2m+1, got j={j}, m={m}")

    def f(u: float) -> float:
        c = math.cos(u)
        return ((1 + a) + (1 - a) * c * c) ** -(m + 1) * c**j

    return integrate(IntegrandSpec(f, Finite(0.0, math.pi), 1e-12, abs_tol=1e-12))[0]


def ramanujan_rhs(a: float, m: int) -> float:
    """(1/pi) 2^(6m+3/2) [m C(4m,2m) C(2m,m)]^-1 N(a; m)."""
    return 2 ** (6 * m + 1.5) / (math.pi * m * binomial(4 * m, 2 * m) * binomial(2 * m, m)) * quartic_value(a, m)


def check_ramanujan(a: float, m: int) -> tuple[float, float]:
    """Both sides of int_0^oo x^(m-1) (a + sqrt(1+x))^-(2m+1/2) dx = ramanujan_rhs."""
    if a <= -1:
        raise DomainError(f"need a > -1, got a={a}")
    if m < 1:
        raise DomainError(f"need m >= 1, got m={m}")
    p = 2 * m + 0.5

    # x = w^4 turns the slow x^(-5/4) tail into w^(-2)
    def f(w: float) -> float:
        w2 = w * w
        x = w2 * w2
        return 4 * w2 * w * x ** (m - 1) / (a + math.sqrt(1 + x)) ** p

    lhs = quad(f, rel_tol=1e-11)
    return lhs, ramanujan_rhs(a, m)


def check_gh_derivative(a: float, c: float) -> tuple[float, float]:
    """Both sides of int_0^oo dx/(x^4 + 2a x^2 + 1 + c) = pi sqrt(2) h'(c)."""
    if a <= -1:
        raise DomainError(f"need a > -1, got a={a}")
    if c <= -1:
        raise DomainError(f"need c > -1, got c={c}")
    r = math.sqrt(1 + c)
    if a + r <= 0:
        raise DomainError("need a + sqrt(1+c) > 0")

    def f(x: float) -> float:
        x2 = x * x
        return 1.0 / (x2 * x2 + 2 * a * x2 + 1 + c)

    lhs = quad(f, rel_tol=1e-13)
    h_prime = 1 / (4 * r * math.sqrt(a + r))
    return lhs, math.pi * math.sqrt(2) * h_prime
