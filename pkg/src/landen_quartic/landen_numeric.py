"""Iterative Landen-type schemes in floating point.

* ``agm`` / ``elliptic_G``: the arithmetic-geometric mean, quadratic.
* ``landen_step2`` / ``landen_iterate2``: a parameter map preserving
  int_R dx / (a x^2 + b x + c), converging cubically.
* ``landen_step6`` / ``landen_iterate6``: a parameter map preserving
  U6 = int_0^oo (c x^4 + d x^2 + e) / (x^6 + a x^4 + b x^2 + 1) dx, whose
  limit is a = b = 3, (c, d, e) = L (1, 2, 1) and U6 = pi L / 2.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import DivergenceError, DomainError, SingularStepError
from .poly import Poly, count_real_roots

MAX_STEPS = 64


@dataclass(frozen=True)
class LandenState2:
    a: float
    b: float
    c: float

    @property
    def discriminant(self) -> float:
        """4ac - b^2, positive for an admissible state."""
        return 4 * self.a * self.c - self.b**2

    def integral(self) -> float:
        return 2 * math.pi / math.sqrt(self.discriminant)


@dataclass(frozen=True)
class LandenState6:
    a: float
    b: float
    c: float
    d: float
    e: float

    def astuple(self) -> tuple[float, float, float, float, float]:
        return (self.a, self.b, self.c, self.d, self.e)


@dataclass
class ConvergenceReport:
    iterations: int
    error_trace: list[float] = field(default_factory=list)
    estimated_order: float | None = None
    final_value: float = math.nan
    converged: bool = False

    def to_dict(self) -> dict:
        return {
            "iterations": self.iterations,
            "errorTrace": list(self.error_trace),
            "estimatedOrder": self.estimated_order,
            "finalValue": self.final_value,
            "converged": self.converged,
        }


def estimate_order(errors) -> float:
    """Least-squares slope of log e_{n+1} against log e_n."""
    errs = [float(e) for e in errors]
    if len(errs) < 4:
        raise ValueError(f"need at least 4 error values, got {len(errs)}")
    if any(e <= 0 for e in errs):
        raise ValueError("errors must be strictly positive")
    if any(e1 >= e0 for e0, e1 in zip(errs, errs[1:])):
        raise ValueError("errors must be strictly decreasing")
    logs = np.log(errs)
    slope, _ = np.polyfit(logs[:-1], logs[1:], 1)
    return float(slope)


def order_or_none(trace: list[float], floor: float) -> float | None:
    """Order from the part of the trace above the rounding floor."""
    usable = [e for e in trace if e > floor]
    try:
        return estimate_order(usable)
    except ValueError:
        return None


# arithmetic-geometric mean

def agm_sequence(a: float, b: float, tol: float = 1e-15) -> list[tuple[float, float]]:
    if a <= 0 or b <= 0:
        raise DomainError(f"AGM needs positive arguments, got ({a}, {b})")
    pairs = [(float(a), float(b))]
    for _ in range(MAX_STEPS):
        x, y = pairs[-1]
        if abs(x - y) <= tol * max(x, y):
            return pairs
        pairs.append(((x + y) / 2, math.sqrt(x * y)))
    raise DivergenceError(f"AGM did not converge in {MAX_STEPS} steps")


def agm(a: float, b: float, tol: float = 1e-15) -> float:
    """Common limit of a -> (a+b)/2, b -> sqrt(ab); ``tol`` is relative."""
    x, y = agm_sequence(a, b, tol)[-1]
    return (x + y) / 2


def elliptic_G(a: float, b: float) -> float:
    """int_0^(pi/2) dphi / sqrt(a^2 cos^2 phi + b^2 sin^2 phi) = pi / (2 AGM(a, b))."""
    return math.pi / (2 * agm(a, b))


# quadratic scheme, cubic convergence

def landen_step2(s: LandenState2) -> LandenState2:
    a, b, c = s.a, s.b, s.c
    den = (3 * a + c) * (a + 3 * c) - b * b
    if den == 0:
        raise SingularStepError(f"shared denominator vanishes at {s}")
    return LandenState2(
        a * ((a + 3 * c) ** 2 - 3 * b * b) / den,
        b * (3 * (a - c) ** 2 - b * b) / den,
        c * ((3 * a + c) ** 2 - 3 * b * b) / den,
    )


def landen_iterate2(a: float, b: float, c: float, tol: float = 1e-12) -> tuple[float, ConvergenceReport]:
    """Iterate :func:`landen_step2` until the parameter error drops below ``tol``.

    The error is the Euclidean norm of (a_n - r, b_n, c_n - r) with
    r = sqrt(4ac - b^2) / 2; the integral is pi / a_n at the end.
    """
    state = LandenState2(float(a), float(b), float(c))
    disc = state.discriminant
    if not disc > 0 or state.a <= 0:
        raise DomainError(f"need a > 0 and 4ac - b^2 > 0, got {state}")
    r = math.sqrt(disc) / 2

    def error(s: LandenState2) -> float:
        return math.sqrt((s.a - r) ** 2 + s.b**2 + (s.c - r) ** 2)

    trace = [error(state)]
    steps = 0
    while trace[-1] >= tol:
        if steps >= MAX_STEPS:
            raise DivergenceError(f"quadratic Landen scheme exceeded {MAX_STEPS} steps; trace={trace}")
        state = landen_step2(state)
        steps += 1
        trace.append(error(state))
    value = math.pi / state.a
    report = ConvergenceReport(
        iterations=steps,
        error_trace=trace,
        estimated_order=order_or_none(trace, 4 * 2.2e-16 * r),
        final_value=value,
        converged=True,
    )
    return value, report


# degree-6 scheme

def landen_step6(s: LandenState6, printed_d_map: bool = False) -> LandenState6:
    """One step of the parameter map preserving U6.

    ``printed_d_map`` swaps in c(b+2) for c(b+3) in the d-update. That
    variant does not fix the limit state and does not preserve U6; it is
    kept only to demonstrate that.
    """
    a, b, c, d, e = s.astuple()
    t = a + b + 2
    if not t > 0:
        raise DomainError(f"need a + b + 2 > 0, got {t}")
    k = 2 if printed_d_map else 3
    return LandenState6(
        (a * b + 5 * a + 5 * b + 9) / t ** (4 / 3),
        (a + b + 6) / t ** (2 / 3),
        (c + d + e) / t ** (2 / 3),
        (c * (b + k) + 2 * d + e * (a + 3)) / t,
        (c + e) / t ** (1 / 3),
    )


def sextic_denominator_positive(a: float, b: float) -> bool:
    """True when x^6 + a x^4 + b x^2 + 1 > 0 for all real x (exact test)."""
    cubic = Poly([1, Fraction(b), Fraction(a), 1])  # in t = x^2
    return count_real_roots(cubic, 0, None) == 0


def U6_integrand(s: LandenState6):
    a, b, c, d, e = s.astuple()

    def f(x: float) -> float:
        x2 = x * x
        return ((c * x2 + d) * x2 + e) / (((x2 + a) * x2 + b) * x2 + 1)

    return f


def landen_iterate6(
    a: float, b: float, c: float, d: float, e: float,
    tol: float = 1e-12, printed_d_map: bool = False,
) -> tuple[float, ConvergenceReport]:
    """Iterate :func:`landen_step6` until max(|a_n - 3|, |b_n - 3|) < tol.

    Returns (pi/2) L with L = (c_n + d_n + e_n) / 4.
    """
    state = LandenState6(*(float(v) for v in (a, b, c, d, e)))
    if not state.a + state.b + 2 > 0:
        raise DomainError(f"need a + b + 2 > 0, got {state}")
    if not sextic_denominator_positive(state.a, state.b):
        raise DomainError(f"x^6 + a x^4 + b x^2 + 1 has a real root for {state}")

    def error(s: LandenState6) -> float:
        return max(abs(s.a - 3), abs(s.b - 3))

    trace = [error(state)]
    steps = 0
    while trace[-1] >= tol:
        if steps >= MAX_STEPS:
            raise DivergenceError(f"degree-6 Landen scheme exceeded {MAX_STEPS} steps; trace={trace}")
        state = landen_step6(state, printed_d_map)
        steps += 1
        err = error(state)
        if not math.isfinite(err):
            raise DivergenceError(f"degree-6 Landen scheme left the admissible region at step {steps}")
        trace.append(err)
    # at a = b = 3 the (c, d, e) map is nilpotent off the line L(1, 2, 1):
    # two more steps bring e into line with (c + d + e) / 4
    for _ in range(2):
        L = (state.c + state.d + state.e) / 4
        if abs(state.e - L) <= tol * max(1.0, abs(L)) or steps >= MAX_STEPS:
            break
        state = landen_step6(state, printed_d_map)
        steps += 1
        trace.append(error(state))
    L = (state.c + state.d + state.e) / 4
    if abs(state.e - L) > tol * max(1.0, abs(L)):
        warnings.warn(
            f"L estimates disagree: (c+d+e)/4 = {L!r}, e = {state.e!r}",
            RuntimeWarning,
            stacklevel=2,
        )
    value = math.pi / 2 * L
    report = ConvergenceReport(
        iterations=steps,
        error_trace=trace,
        estimated_order=order_or_none(trace, 4 * 2.2e-16 * 3),
        final_value=value,
        converged=True,
    )
    return value, report
