"""Exact combinatorics behind the quartic integral

    N(a; m) = int_0^oo dx / (x^4 + 2 a x^2 + 1)^(m+1)
            = (pi/2) * P_m(a) / [2(a+1)]^(m+1/2).

Everything returning a ``Fraction``, ``Poly`` or ``PiRational`` is exact.
Functions of a real ``a`` return floats but keep the combinatorial part
exact until the last multiplication.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError
from .poly import Poly, as_exact, format_fraction


def _check_order(m) -> int:
    if isinstance(m, bool) or not isinstance(m, int):
        if isinstance(m, float) and m.is_integer():
            m = int(m)
        else:
            raise DomainError(f"m must be a nonnegative integer, got {m!r}")
    if m < 0:
        raise DomainError(f"m must be a nonnegative integer, got {m}")
    return m


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def pochhammer(a, k: int) -> Fraction:
    """Rising factorial a(a+1)...(a+k-1)."""
    a = as_exact(a)
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


@dataclass(frozen=True)
class PiRational:
    """Exact value ``q * pi**pi_power`` with ``pi_power`` in {0, 1}."""

    q: Fraction
    pi_power: int = 0

    def __post_init__(self):
        object.__setattr__(self, "q", as_exact(self.q))
        if self.pi_power not in (0, 1):
            raise DomainError("only pi**0 and pi**1 are representable")

    def __add__(self, other: PiRational) -> PiRational:
        if not isinstance(other, PiRational):
            return NotImplemented
        if self.q == 0:
            return other
        if other.q == 0:
            return self
        if other.pi_power != self.pi_power:
            raise DomainError("cannot add values with different powers of pi")
        return PiRational(self.q + other.q, self.pi_power)

    def __mul__(self, other) -> PiRational:
        if isinstance(other, PiRational):
            power = self.pi_power + other.pi_power
            if power > 1:
                raise DomainError("pi**2 is not representable")
            return PiRational(self.q * other.q, power)
        return PiRational(self.q * as_exact(other), self.pi_power)

    __rmul__ = __mul__

    def __truediv__(self, other) -> PiRational:
        if isinstance(other, PiRational):
            if other.pi_power > self.pi_power:
                raise DomainError("1/pi is not representable")
            return PiRational(self.q / other.q, self.pi_power - other.pi_power)
        return PiRational(self.q / as_exact(other), self.pi_power)

    def __float__(self) -> float:
        return float(self.q) * (math.pi if self.pi_power else 1.0)

    def __str__(self) -> str:
        s = format_fraction(self.q)
        if self.pi_power == 0:
            return s
        if self.q == 1:
            return "π"
        return f"{s}·π"


# coefficients d_l(m)

@lru_cache(maxsize=None)
def d_coeff(m: int, l: int) -> Fraction:
    """d_l(m) = 2^(-2m) sum_{k=l}^{m} 2^k C(2m-2k, m-k) C(m+k, m) C(k, l)."""
    m = _check_order(m)
    if not 0 <= l <= m:
        raise DomainError(f"need 0 <= l <= m, got l={l}, m={m}")
    total = sum(
        2**k * binomial(2 * m - 2 * k, m - k) * binomial(m + k, m) * binomial(k, l)
        for k in range(l, m + 1)
    )
    return Fraction(total, 4**m)


def d_coeff_oracle(m: int, l: int) -> Fraction:
    """The original triple-index alternating sum for d_l(m).

    Shares nothing with :func:`d_coeff` except :func:`binomial`, so it is
    used as an independent check.
    """
    m = _check_order(m)
    if not 0 <= l <= m:
        raise DomainError(f"need 0 <= l <= m, got l={l}, m={m}")
    total = Fraction(0)
    for j in range(l + 1):
        for s in range(m - l + 1):
            for k in range(s + l, m + 1):
                term = (
                    binomial(2 * k, k)
                    * binomial(2 * m + 1, 2 * s + 2 * j)
                    * binomial(m - s - j, m - k)
                    * binomial(s + j, j)
                    * binomial(k - s - j, l - j)
                )
                if term:
                    sign = -1 if (k - l - s) % 2 else 1
                    total += Fraction(sign * term, 8**k)
    return total


def poly_P(m: int) -> Poly:
    """P_m(a) = sum_l d_l(m) a^l."""
    m = _check_order(m)
    return Poly(d_coeff(m, l) for l in range(m + 1))


def poly_P_shifted(m: int) -> Poly:
    """P_m built from its expansion in powers of (1 + a).

    P_m(a) = 2^(-2m) sum_k 2^k C(2m-2k, m-k) C(m+k, m) (1+a)^k. Expanding the
    powers of (1+a) must give back :func:`poly_P`.
    """
    m = _check_order(m)
    one_plus_a = Poly([1, 1])
    out = Poly()
    for k in range(m + 1):
        c = Fraction(2**k * binomial(2 * m - 2 * k, m - k) * binomial(m + k, m), 4**m)
        out = out + one_plus_a**k * c
    return out


@dataclass(frozen=True)
class QuarticClosedForm:
    """N(a; m) = (pi/2) P(a) / [2(a+1)]^(m+1/2)."""

    m: int
    P: Poly

    @classmethod
    def of(cls, m: int) -> QuarticClosedForm:
        return cls(m, poly_P(m))

    def __post_init__(self):
        if self.P.degree != self.m:
            raise DomainError("P must have degree m")
        if any(c <= 0 for c in self.P.coeffs):
            raise DomainError("P must have strictly positive coefficients")

    def __call__(self, a: float) -> float:
        a = _check_a(a)
        return math.pi / 2 * float(self.P(as_exact(a))) / (2 * (a + 1)) ** (self.m + 0.5)


def _check_a(a) -> float:
    af = float(a)
    if not math.isfinite(af) or af <= -1:
        raise DomainError(f"the quartic integral needs a > -1, got a={a}")
    return af


def quartic_value(a: float, m: int) -> float:
    """N(a; m) from the closed form with coefficients d_l(m)."""
    return QuarticClosedForm.of(_check_order(m))(a)


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    n, d = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def quartic_exact(a, m: int) -> PiRational | None:
    """Exact N(a; m) when 2(a+1) is the square of a rational, else ``None``."""
    m = _check_order(m)
    a = as_exact(a)
    if a <= -1:
        raise DomainError(f"the quartic integral needs a > -1, got a={a}")
    r = _rational_sqrt(2 * (a + 1))
    if r is None:
        return None
    return PiRational(poly_P(m)(a) / (2 * r ** (2 * m + 1)), 1)


def quartic_value_shifted(a: float, m: int) -> float:
    """N(a; m) = pi / (8a+8)^(m+1/2) * sum_i C(2m-2i, m-i) C(m+i, m) 2^i (a+1)^i."""
    m = _check_order(m)
    a = _check_a(a)
    s = sum(
        binomial(2 * m - 2 * i, m - i) * binomial(m + i, m) * 2**i * (a + 1) ** i
        for i in range(m + 1)
    )
    return math.pi * s / (8 * a + 8) ** (m + 0.5)


def sqrt_quartic(a: float, b: float) -> float:
    """int_0^oo dx / (b x^4 + 2 a x^2 + 1) = pi / (2 sqrt 2) / sqrt(a + sqrt b)."""
    if b <= 0:
        raise DomainError(f"need b > 0, got b={b}")
    inner = a + math.sqrt(b)
    if inner <= 0:
        raise DomainError(f"need a + sqrt(b) > 0, got {inner}")
    return math.pi / (2 * math.sqrt(2)) / math.sqrt(inner)


# the polynomial T_m and the phi identities

def T_poly(m: int) -> Poly:
    """T_m(y) = sum_{k=0}^{m} C(m+k, m-k) y^(2k)."""
    m = _check_order(m)
    coeffs = [0] * (2 * m + 1)
    for k in range(m + 1):
        coeffs[2 * k] = binomial(m + k, m - k)
    return Poly(coeffs)


def _check_phi(phi) -> Fraction:
    phi = as_exact(phi)
    if phi == 0:
        raise DomainError("phi must be nonzero")
    return phi


def phi_lhs(m: int, phi) -> Fraction:
    """(phi^(2m+1) + phi^-(2m+1)) / (phi + 1/phi)."""
    phi = _check_phi(phi)
    p = phi ** (2 * m + 1)
    return (p + 1 / p) / (phi + 1 / phi)


def phi_rhs(m: int, phi) -> Fraction:
    """T_m(phi - 1/phi)."""
    phi = _check_phi(phi)
    return T_poly(m)(phi - 1 / phi)


def check_phi_identity(m: int, phi) -> bool:
    m = _check_order(m)
    return phi_lhs(m, phi) == phi_rhs(m, phi)


def check_recurrence(m: int, phi) -> bool:
    """Both phi-sequences satisfy c_{m+2} - (phi^2 + phi^-2) c_{m+1} + c_m = 0."""
    m = _check_order(m)
    phi = _check_phi(phi)
    w = phi**2 + phi**-2
    for seq in (phi_lhs, phi_rhs):
        c0, c1, c2 = (seq(m + i, phi) for i in range(3))
        if c2 - w * c1 + c0 != 0:
            return False
    return True


# hypergeometric route

def hypergeom_2f1_terminating(neg_m: int, b, c, z) -> Fraction:
    """2F1(-m, b; c; z) for integer m >= 0, summed exactly.

    ``neg_m`` is the first parameter itself (0, -1, -2, ...).
    """
    if isinstance(neg_m, bool) or int(neg_m) != neg_m or neg_m > 0:
        raise DomainError(f"first parameter must be a nonpositive integer, got {neg_m}")
    m = -int(neg_m)
    b, c, z = as_exact(b), as_exact(c), as_exact(z)
    if c.denominator == 1 and c <= 0 and -c < m:
        raise DomainError(f"c = {c} makes a denominator vanish before the series ends")
    term = Fraction(1)
    total = Fraction(1)
    for k in range(m):
        term = term * (neg_m + k) * (b + k) / ((c + k) * (k + 1)) * z
        total += term
    return total


def _half_integer(x) -> Fraction:
    x = as_exact(x)
    if (2 * x).denominator != 1:
        raise DomainError(f"{x} is neither an integer nor a half-integer")
    if x <= 0:
        raise DomainError(f"argument must be positive, got {x}")
    return x


def gamma_half_integer(x) -> tuple[Fraction, int]:
    """Gamma(x) as ``(q, e)`` meaning ``q * sqrt(pi)**e``, e in {0, 1}."""
    x = _half_integer(x)
    if x.denominator == 1:
        return Fraction(math.factorial(int(x) - 1)), 0
    n = int(x - Fraction(1, 2))
    return Fraction(math.factorial(2 * n), 4**n * math.factorial(n)), 1


def beta_half_integer(x, y) -> PiRational:
    """B(x, y) for integer or half-integer x, y > 0."""
    gx, ex = gamma_half_integer(x)
    gy, ey = gamma_half_integer(y)
    gxy, exy = gamma_half_integer(as_exact(x) + as_exact(y))
    half_powers = ex + ey - exy
    # half_powers is 0 or 2: sqrt(pi)^2 = pi
    return PiRational(gx * gy / gxy, half_powers // 2)


def quartic_via_2f1(a: float, m: int) -> float:
    """N(a; m) = 2^(m-1/2) (a+1)^-(m+1/2) B(2m+3/2, 1/2) 2F1(-m, m+1; m+3/2; (1-a)/2)."""
    m = _check_order(m)
    a = _check_a(a)
    half = Fraction(1, 2)
    beta = beta_half_integer(2 * m + 1 + half, half)
    f = hypergeom_2f1_terminating(-m, m + 1, m + 1 + half, (1 - as_exact(a)) / 2)
    return 2 ** (m - 0.5) * (a + 1) ** -(m + 0.5) * float(beta) * float(f)


def even_moment(k: int, m: int) -> PiRational:
    """int_0^oo t^(2k) dt / (1+t^2)^(m+1) = pi/2^(2m+1) C(2k,k) C(2m-2k,m-k) / C(m,k)."""
    m = _check_order(m)
    if not isinstance(k, int) or k < 0:
        raise DomainError(f"k must be a nonnegative integer, got {k!r}")
    if k > m:
        raise DomainError(f"the moment integral diverges for k > m (k={k}, m={m})")
    q = Fraction(binomial(2 * k, k) * binomial(2 * m - 2 * k, m - k), 2 ** (2 * m + 1) * binomial(m, k))
    return PiRational(q, 1)


def binom_identity_check(m: int, k: int) -> bool:
    """C(m+k, m-k) C(2k, k) == C(m+k, m) C(m, k)."""
    return binomial(m + k, m - k) * binomial(2 * k, k) == binomial(m + k, m) * binomial(m, k)


def fib_sum(n: int, z):
    return sum(binomial(n - k, k) * z**k for k in range(n + 1))


def fib_sum_identity_check(n: int, z, rtol: float = 1e-13) -> bool:
    """Check the closed form of sum_k C(n-k, k) z^k built from B_{-1} and B_2.

    Runs in exact arithmetic when ``z`` is rational and 1 + 4z is a rational
    square; otherwise in floating point with relative tolerance ``rtol``.
    """
    n = _check_order(n)
    exact = isinstance(z, (int, Fraction))
    r = None
    if exact:
        z = Fraction(z)
        r = _rational_sqrt(1 + 4 * z)
    if r is None:
        zf = float(z)
        if 1 + 4 * zf < 0:
            raise DomainError(f"1 + 4z must be nonnegative, got z={z}")
        z, r = zf, math.sqrt(1 + 4 * zf)
    if r == 0:
        raise DomainError("1 + 4z = 0 makes the closed form singular")
    b_minus1 = (1 + r) / 2
    if z == 0:
        tail = 0
    else:
        b2 = (1 - r) / (-2 * z)  # B_2 evaluated at -z
        tail = (-z) ** (n + 1) * b2 ** (n + 1)
    lhs = (b_minus1 ** (n + 1) - tail) / r
    rhs = fib_sum(n, z)
    if r is not None and isinstance(r, Fraction):
        return lhs == rhs
    return abs(lhs - rhs) <= rtol * max(abs(rhs), 1.0)
