"""Exact rational Landen transformation built on y = (x^2 - 1) / (2x).

For a rational ``f`` the image is

    g(y) = [f(x+) + f(x-)] + y / sqrt(y^2+1) * [f(x+) - f(x-)],
    x+- = y +- sqrt(y^2 + 1),

and ``g`` is again rational with the same integral. Writing ``phi = x+`` we
have ``x- = -1/phi``, ``2y = phi - 1/phi`` and ``2 sqrt(y^2+1) = phi + 1/phi``,
so the whole computation is Laurent-polynomial algebra in ``phi`` followed by
a rewrite in ``u = phi - 1/phi`` and ``s = phi + 1/phi`` (with s^2 = u^2 + 4).
No square root is ever evaluated.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError, SymmetryError
from .exact import T_poly, _check_order, even_moment
from .poly import LaurentPoly, Poly, RationalFunction, as_exact, count_real_roots

_U = LaurentPoly({1: 1, -1: -1})  # phi - 1/phi
_S = LaurentPoly({1: 1, -1: 1})  # phi + 1/phi


def _at_phi(p: Poly) -> LaurentPoly:
    return LaurentPoly.from_poly(p)


def _at_minus_inv_phi(p: Poly) -> LaurentPoly:
    return LaurentPoly.from_poly(p).involution()


def split_symmetric(L: LaurentPoly) -> tuple[Poly, Poly]:
    """Write ``L = P(u) + s * R(u)`` with u = phi - 1/phi, s = phi + 1/phi.

    Peels off the outermost exponents: ``u^n`` and ``s*u^(n-1)`` both start
    with ``phi^n`` and end with ``(-1)^n phi^-n`` resp. ``(-1)^(n-1) phi^-n``,
    so the two outer coefficients determine one term of each family.
    """
    P: dict[int, Fraction] = {}
    R: dict[int, Fraction] = {}
    rest = L
    u_pows = [LaurentPoly({0: 1})]
    while not rest.is_zero():
        n = max(rest.max_exp, -rest.min_exp)
        while len(u_pows) <= n:
            u_pows.append(u_pows[-1] * _U)
        if n == 0:
            P[0] = P.get(0, 0) + rest.coeff(0)
            break
        top, bottom = rest.coeff(n), rest.coeff(-n)
        sign = -1 if n % 2 else 1
        p = (top + sign * bottom) / 2
        r = (top - sign * bottom) / 2
        if p:
            P[n] = p
            rest = rest - u_pows[n] * p
        if r:
            R[n - 1] = r
            rest = rest - _S * u_pows[n - 1] * r
    deg_p = max(P, default=-1)
    deg_r = max(R, default=-1)
    return (
        Poly(P.get(i, 0) for i in range(deg_p + 1)),
        Poly(R.get(i, 0) for i in range(deg_r + 1)),
    )


def _invariant_to_y(L: LaurentPoly, what: str) -> Poly:
    if L.involution() != L:
        raise SymmetryError(f"{what} is not invariant under phi -> -1/phi")
    P, R = split_symmetric(L)
    if not R.is_zero():
        raise SymmetryError(f"{what} has a nonzero odd part {R!r}")
    return P.scale_variable(2)  # u = 2y


def has_real_pole(f: RationalFunction) -> bool:
    return count_real_roots(f.den) > 0


def _check_decay(f: RationalFunction) -> None:
    if f.num.is_zero():
        return
    if f.den.degree < f.num.degree + 2:
        raise DomainError(
            f"integral diverges: deg den = {f.den.degree} < deg num + 2 = {f.num.degree + 2}"
        )
    if has_real_pole(f):
        raise DomainError("the denominator has a real root")


def landen_transform_general(f: RationalFunction) -> RationalFunction:
    """Landen image of ``f`` for the whole-line integral (no evenness check).

    The result has the same integral over the real line as ``f``.
    """
    _check_decay(f)
    if f.num.is_zero():
        return f
    N, D = f.num, f.den
    Np, Dp = _at_phi(N), _at_phi(D)
    Nm, Dm = _at_minus_inv_phi(N), _at_minus_inv_phi(D)

    # g = 2 [phi^2 f(phi) + f(-1/phi)] / (phi^2 + 1)
    #   = 2 B s / (s^2 D(phi) D(-1/phi)),  B = [phi^2 N Dm + Nm Dp] / phi
    B = (Np * Dm).shift(1) + (Nm * Dp).shift(-1)
    num = B * _S * 2
    den = _S * _S * Dp * Dm
    return RationalFunction(
        _invariant_to_y(num, "numerator"),
        _invariant_to_y(den, "denominator"),
    )


def landen_transform(f: RationalFunction) -> RationalFunction:
    """Landen image of an even rational ``f``.

    For even ``f`` the half-line integrals of ``f`` and of the image agree,
    and the image is even.
    """
    if not f.is_even():
        raise DomainError("landen_transform expects an even rational function; "
                          "use landen_transform_general for the whole line")
    return landen_transform_general(f)


def quartic_Q(a, m: int) -> RationalFunction:
    """(x^4 + 2a x^2 + 1)^-(m+1) with exact ``a``."""
    m = _check_order(m)
    a = as_exact(a)
    return RationalFunction(Poly([1]), Poly([1, 0, 2 * a, 0, 1]) ** (m + 1))


def quartic_Q1(a, m: int) -> RationalFunction:
    """T_m(2y) / (2^m (1 + a + 2y^2)^(m+1))."""
    m = _check_order(m)
    a = as_exact(a)
    den = Poly([1 + a, 0, 2]) ** (m + 1) * 2**m
    return RationalFunction(T_poly(m).scale_variable(2), den)


def quartic_via_landen(a: float, m: int) -> float:
    """N(a; m) by integrating the Landen image term by term.

    With y = sqrt((1+a)/2) t each term of T_m(2y) becomes an even moment
    int_0^oo t^(2k) / (1+t^2)^(m+1) dt, which is known exactly.
    """
    m = _check_order(m)
    a = float(a)
    if a <= -1:
        raise DomainError(f"the quartic integral needs a > -1, got a={a}")
    T = T_poly(m)
    half_scale = (1 + a) / 2
    total = 0.0
    for k in range(m + 1):
        c = T[2 * k]
        # (2y)^(2k) dy / (2^m (1+a)^(m+1) (1+t^2)^(m+1)), y = sqrt(half_scale) t
        factor = 4**k * half_scale ** (k + 0.5) / (2**m * (1 + a) ** (m + 1))
        total += float(c) * factor * float(even_moment(k, m))
    return total


def cot_multiple(m: int) -> RationalFunction:
    """R_m with cot(m theta) = R_m(cot theta)."""
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise DomainError(f"m must be a positive integer, got {m!r}")
    x = RationalFunction.x()
    r = x
    for _ in range(m - 1):
        r = (x * r - 1) / (x + r)
    return r


def cot_multiple_numeric(m: int, x: float) -> float:
    """cot(m * arccot(x)) evaluated in floating point, for cross-checks."""
    theta = math.atan2(1.0, x)
    return math.cos(m * theta) / math.sin(m * theta)
