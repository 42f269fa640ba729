"""Exact univariate algebra over the rationals.

Three immutable value types live here:

``Poly``
    dense polynomial, ``coeffs[i]`` is the coefficient of ``x**i``.
``RationalFunction``
    quotient of two ``Poly`` kept in canonical form (coprime, monic
    denominator), so ``==`` is mathematical equality.
``LaurentPoly``
    sparse polynomial with integer (possibly negative) exponents, used for
    the phi-substitution of the Landen transformation.

All coefficients are :class:`fractions.Fraction`; nothing is ever rounded.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence, Union

ExactScalar = Fraction
Scalar = Union[int, Fraction]


def as_exact(value) -> Fraction:
    """Convert ints, Fractions, floats (exactly) or ``"p/q"`` strings."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to an exact scalar")


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_exact(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    # constructors

    @classmethod
    def constant(cls, c) -> Poly:
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c=1) -> Poly:
        return cls([0] * degree + [c])

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    # basic queries

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    # arithmetic

    @staticmethod
    def _coerce(other) -> Poly:
        if isinstance(other, Poly):
            return other
        return Poly([other])

    def __add__(self, other) -> Poly:
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> Poly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Poly:
        return self._coerce(other) - self

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            c = as_exact(other)
            return Poly(c * a for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - dq - 1, -1, -1):
            c = rem[k + dq] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self * (1 / self.leading)

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def scale_variable(self, c) -> Poly:
        """Return ``p(c*x)``."""
        c = as_exact(c)
        return Poly(a * c**i for i, a in enumerate(self.coeffs))

    def compose(self, inner: Poly) -> Poly:
        result = Poly()
        for a in reversed(self.coeffs):
            result = result * inner + a
        return result

    def __call__(self, x):
        acc = 0 if isinstance(x, (int, Fraction)) else 0.0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def to_floats(self) -> tuple[float, ...]:
        return tuple(float(c) for c in self.coeffs)

    # comparison / display

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Poly", self.coeffs))

    def __repr__(self) -> str:
        return f"Poly([{', '.join(format_fraction(c) for c in self.coeffs)}])"

    def format(self, var: str = "x") -> str:
        """Ascending-power rendering, e.g. ``3/2 + x``."""
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = format_fraction(abs(c))
            if i == 0:
                term = mag
            else:
                power = var if i == 1 else f"{var}^{i}"
                if abs(c) == 1:
                    term = power
                elif c.denominator == 1:
                    term = f"{mag}*{power}"
                else:
                    term = f"({mag})*{power}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            out += f" {sign} {term}"
        return out

    __str__ = format


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor (Euclid over Q)."""
    while not q.is_zero():
        p, q = q, (p % q).monic()
    return p.monic()


def sturm_sequence(p: Poly) -> list[Poly]:
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        r = -(seq[-2] % seq[-1])
        if r.is_zero():
            break
        seq.append(r)
    return seq


def _sign_changes(values: Sequence[Fraction]) -> int:
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _signs_at_infinity(seq: Sequence[Poly], positive: bool) -> list[int]:
    out = []
    for s in seq:
        if s.is_zero():
            continue
        sign = 1 if s.leading > 0 else -1
        if not positive and s.degree % 2:
            sign = -sign
        out.append(sign)
    return out


def count_real_roots(p: Poly, lo=None, hi=None) -> int:
    """Number of distinct real roots of ``p`` in the half-open ``(lo, hi]``.

    ``None`` stands for -inf / +inf. Uses a Sturm sequence, so the count is
    exact for exact coefficients.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    if p.degree == 0:
        return 0
    seq = sturm_sequence(p)

    def changes(x, positive_inf: bool) -> int:
        if x is None:
            return _sign_changes(_signs_at_infinity(seq, positive_inf))
        x = as_exact(x)
        return _sign_changes([s(x) for s in seq])

    return changes(lo, False) - changes(hi, True)


class RationalFunction:
    """Canonical quotient ``num/den``: coprime with monic ``den``."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = num if isinstance(num, Poly) else Poly([num])
        den = Poly([1]) if den is None else (den if isinstance(den, Poly) else Poly([den]))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = Poly(), Poly([1])
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lead = den.leading
            num, den = num * (1 / lead), den * (1 / lead)
        self.num: Poly = num
        self.den: Poly = den

    @classmethod
    def x(cls) -> RationalFunction:
        return cls(Poly.x())

    @staticmethod
    def _coerce(other) -> RationalFunction:
        if isinstance(other, RationalFunction):
            return other
        return RationalFunction(other)

    def __add__(self, other) -> RationalFunction:
        other = self._coerce(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> RationalFunction:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> RationalFunction:
        return self._coerce(other) - self

    def __mul__(self, other) -> RationalFunction:
        other = self._coerce(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalFunction:
        other = self._coerce(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> RationalFunction:
        return self._coerce(other) / self

    def __pow__(self, n: int) -> RationalFunction:
        if n >= 0:
            return RationalFunction(self.num**n, self.den**n)
        return RationalFunction(self.den ** (-n), self.num ** (-n))

    def compose(self, inner) -> RationalFunction:
        """``self(inner(x))`` for a rational ``inner``."""
        inner = self._coerce(inner)
        p, q = inner.num, inner.den
        d = max(self.num.degree, self.den.degree, 0)

        def homogenize(poly: Poly) -> Poly:
            out = Poly()
            for i, c in enumerate(poly.coeffs):
                out = out + (p**i) * (q ** (d - i)) * c
            return out

        return RationalFunction(homogenize(self.num), homogenize(self.den))

    def reflect(self) -> RationalFunction:
        """``f(-x)``."""
        return RationalFunction(self.num.scale_variable(-1), self.den.scale_variable(-1))

    def is_even(self) -> bool:
        return self.reflect() == self

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def float_evaluator(self):
        """Fast float callable with coefficients rounded once."""
        nc = self.num.to_floats()[::-1]
        dc = self.den.to_floats()[::-1]

        def f(x: float) -> float:
            n = 0.0
            for c in nc:
                n = n * x + c
            d = 0.0
            for c in dc:
                d = d * x + c
            return n / d

        return f

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int, Fraction)):
            return self == RationalFunction(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("RationalFunction", self.num, self.den))

    def format(self, var: str = "x") -> str:
        return f"({self.num.format(var)}) / ({self.den.format(var)})"

    __str__ = format

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"


class LaurentPoly:
    """Sparse Laurent polynomial in one variable (phi), exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        clean = {}
        for k, c in (terms or {}).items():
            c = as_exact(c)
            if c:
                clean[int(k)] = c
        self.terms: dict[int, Fraction] = clean

    @classmethod
    def from_poly(cls, p: Poly, shift: int = 0) -> LaurentPoly:
        """``phi**shift * p(phi)``."""
        return cls({i + shift: c for i, c in enumerate(p.coeffs)})

    @classmethod
    def monomial(cls, k: int, c=1) -> LaurentPoly:
        return cls({k: c})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def max_exp(self) -> int:
        return max(self.terms) if self.terms else 0

    @property
    def min_exp(self) -> int:
        return min(self.terms) if self.terms else 0

    def coeff(self, k: int) -> Fraction:
        return self.terms.get(k, Fraction(0))

    def __add__(self, other) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly({0: other})
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __mul__(self, other) -> LaurentPoly:
        if not isinstance(other, LaurentPoly):
            c = as_exact(other)
            return LaurentPoly({k: c * v for k, v in self.terms.items()})
        out: dict[int, Fraction] = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        result, base = LaurentPoly({0: 1}), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        return LaurentPoly({e + k: c for e, c in self.terms.items()})

    def involution(self) -> LaurentPoly:
        """Substitute ``phi -> -1/phi``."""
        return LaurentPoly({-k: c if k % 2 == 0 else -c for k, c in self.terms.items()})

    def __call__(self, phi):
        return sum((c * phi**k for k, c in self.terms.items()), Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("LaurentPoly", tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {format_fraction(c)}" for k, c in sorted(self.terms.items()))
        return f"LaurentPoly({{{body}}})"
