"""Named property suites run by ``landen-quartic verify``.

Each suite is a list of :class:`Check` records. A check carries the worst
residual it saw so a failing run says by how much it failed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import exact, landen_numeric as ln, landen_symbolic as ls
from .quadrature import (
    Finite,
    WholeLine,
    check_gh_derivative,
    check_ramanujan,
    check_vanishing_odd,
    quad,
    quartic_by_quadrature,
)

A_GRID = (0.1, 0.5, 1.0, 2.0, 10.0)
PHI_GRID = tuple(
    Fraction(p, q) for p, q in [
        (1, 1), (2, 1), (3, 1), (1, 2), (1, 3), (2, 3), (3, 2), (5, 7), (7, 3), (-1, 1),
        (-2, 1), (-1, 2), (-3, 5), (-7, 4), (11, 13), (13, 11), (4, 9), (-9, 4), (17, 5), (1, 10),
    ]
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    residual: float

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "residual": self.residual}


def _rel(x: float, y: float) -> float:
    return abs(x - y) / max(abs(y), 1e-300)


def random_state2(rng: random.Random) -> ln.LandenState2:
    while True:
        a, c = rng.uniform(0.2, 5.0), rng.uniform(0.2, 5.0)
        b = rng.uniform(-1.0, 1.0) * 2 * math.sqrt(a * c)
        if 4 * a * c - b * b > 0.1 * a * c:
            return ln.LandenState2(a, b, c)


def random_state6(rng: random.Random) -> ln.LandenState6:
    while True:
        a, b = rng.uniform(-1.5, 10.0), rng.uniform(-1.5, 10.0)
        if a + b + 2 > 0 and ln.sextic_denominator_positive(a, b):
            return ln.LandenState6(a, b, rng.uniform(0.0, 3.0), rng.uniform(0.0, 3.0), rng.uniform(0.1, 3.0))


def quad_whole_line2(s: ln.LandenState2) -> float:
    return quad(lambda x: 1.0 / ((s.a * x + s.b) * x + s.c), WholeLine(), rel_tol=1e-13)


def quad_U6(s: ln.LandenState6) -> float:
    return quad(ln.U6_integrand(s), rel_tol=1e-13)


def elliptic_G_by_quadrature(a: float, b: float) -> float:
    def f(t: float) -> float:
        return 1.0 / math.sqrt((a * math.cos(t)) ** 2 + (b * math.sin(t)) ** 2)

    return quad(f, Finite(0.0, math.pi / 2), rel_tol=1e-13)


# suites

def identities() -> list[Check]:
    out = []
    table = [exact.d_coeff(5, l) for l in range(6)]
    expected = [Fraction(4389, 256), Fraction(8589, 128), Fraction(7161, 64),
                Fraction(777, 8), Fraction(693, 16), Fraction(63, 8)]
    out.append(Check("d_l(5) table", table == expected,
                     float(max(abs(x - y) for x, y in zip(table, expected)))))
    for m in range(13):
        diff = max(abs(exact.d_coeff(m, l) - exact.d_coeff_oracle(m, l)) for l in range(m + 1))
        out.append(Check(f"d_coeff = oracle, m={m}", diff == 0, float(diff)))
    smallest = min(exact.d_coeff(m, l) for m in range(31) for l in range(m + 1))
    out.append(Check("d_coeff positive, m<=30", smallest > 0, float(smallest)))
    for m in range(13):
        out.append(Check(f"P_m shifted form, m={m}", exact.poly_P(m) == exact.poly_P_shifted(m), 0.0))
    bad = [(m, k) for m in range(51) for k in range(m + 1) if not exact.binom_identity_check(m, k)]
    out.append(Check("binomial identity, m<=50", not bad, float(len(bad))))
    for m in range(21):
        ok_phi = all(exact.check_phi_identity(m, p) for p in PHI_GRID)
        ok_rec = all(exact.check_recurrence(m, p) for p in PHI_GRID)
        out.append(Check(f"phi identity, m={m}", ok_phi, 0.0))
        out.append(Check(f"phi recurrence, m={m}", ok_rec, 0.0))
    for n, z in [(0, Fraction(5)), (2, Fraction(2)), (5, Fraction(3, 4)), (6, 0.37), (9, 1.7)]:
        out.append(Check(f"Fibonacci-type sum, n={n}, z={z}", exact.fib_sum_identity_check(n, z), 0.0))

    worst = 0.0
    for a in A_GRID:
        for m in range(9):
            vals = [
                exact.quartic_value(a, m),
                exact.quartic_via_2f1(a, m),
                quartic_by_quadrature(a, m),
                ls.quartic_via_landen(a, m),
                exact.quartic_value_shifted(a, m),
            ]
            worst = max(worst, max(_rel(v, vals[0]) for v in vals))
    out.append(Check("route agreement (closed, 2F1, quadrature, Landen)", worst <= 1e-10, worst))

    worst = max(abs(check_vanishing_odd(a, m, j))
                for a in (0.5, 1.0, 3.0) for m in range(5) for j in range(1, 2 * m + 2, 2))
    out.append(Check("odd cosine moments vanish", worst <= 1e-10, worst))
    worst = max(_rel(*check_ramanujan(a, m)) for a in (1.0, 2.0) for m in range(1, 6))
    out.append(Check("Ramanujan master theorem identity", worst <= 1e-6, worst))
    worst = max(_rel(*check_gh_derivative(a, c)) for a in (0.5, 1.0, 2.0) for c in (0.0, 0.1, 3.0))
    out.append(Check("g(c) = pi sqrt2 h'(c)", worst <= 1e-9, worst))
    return out


def convergence() -> list[Check]:
    out = []
    value, report = ln.landen_iterate2(1, 1, 1, tol=1e-12)
    order = report.estimated_order if report.estimated_order is not None else math.nan
    out.append(Check("cubic order on (1,1,1) in [2.7, 3.3]", 2.7 <= order <= 3.3, order))
    err = abs(value - 2 * math.pi / math.sqrt(3))
    out.append(Check("(1,1,1) limit = 2pi/sqrt3", err <= 1e-12, err))

    worst = 0.0
    for a, b, c in [(1, 0, 1), (2, 1, 3), (5, 2, 1), (0.3, -0.2, 4), (7, 3, 0.5)]:
        v, _ = ln.landen_iterate2(a, b, c)
        worst = max(worst, _rel(v, 2 * math.pi / math.sqrt(4 * a * c - b * b)))
    out.append(Check("quadratic scheme limit grid", worst <= 1e-12, worst))

    rng = random.Random(20061)
    worst = 0.0
    for _ in range(100):
        s = random_state2(rng)
        worst = max(worst, _rel(quad_whole_line2(ln.landen_step2(s)), quad_whole_line2(s)))
    out.append(Check("quadratic step invariance, 100 states", worst <= 1e-10, worst))

    worst = max(_rel(ln.elliptic_G(a, b), elliptic_G_by_quadrature(a, b)) for a, b in [(1, 2), (1, 3), (2, 5)])
    out.append(Check("elliptic G = pi / (2 AGM)", worst <= 1e-10, worst))

    rng = random.Random(6)
    worst = 0.0
    for _ in range(100):
        s = random_state6(rng)
        worst = max(worst, _rel(quad_U6(ln.landen_step6(s)), quad_U6(s)))
    out.append(Check("degree-6 step invariance, 100 states", worst <= 1e-10, worst))

    worst = 0.0
    for s in degree6_grid():
        v, rep = ln.landen_iterate6(*s.astuple())
        worst = max(worst, _rel(v, quad_U6(s)))
    out.append(Check("degree-6 limit matches quadrature", worst <= 1e-8, worst))

    fixed = ln.landen_step6(ln.LandenState6(3, 3, 1, 2, 1), printed_d_map=True)
    out.append(Check("printed d-map breaks the fixed point", abs(fixed.d - 2) > 1e-3, fixed.d))
    rng = random.Random(6)
    s = random_state6(rng)
    drift = _rel(quad_U6(ln.landen_step6(s, printed_d_map=True)), quad_U6(s))
    out.append(Check("printed d-map breaks invariance", drift > 1e-6, drift))
    return out


def degree6_grid() -> list[ln.LandenState6]:
    return [
        ln.LandenState6(*p) for p in [
            (3, 3, 1, 2, 1), (4, 5, 1, 1, 1), (0, 0, 1, 0, 1), (10, 1, 2, 3, 4), (-1, 2, 1, 1, 1),
            (1, 1, 0, 0, 1), (6, 2, 0.5, 1, 2), (2, 8, 3, 0, 1), (20, 20, 1, 1, 1), (-1.5, 1, 1, 1, 1),
        ]
    ]


def even_corpus() -> list:
    P, RF = exact.Poly, ls.RationalFunction
    return [
        RF(P([1]), P([1, 0, 1])),
        RF(P([1, 0, 3]), P([2, 0, 1, 0, 5])),
        RF(P([1]), P([1, 0, 1, 0, 1, 0, 1])),
        RF(P([0, 0, 1]), P([4, 0, 0, 0, 1])),
        RF(P([Fraction(1, 2), 0, 0, 0, 1]), P([1, 0, 2, 0, 3, 0, 1])),
        RF(P([1]), P([1, 0, 1]) ** 3),
        ls.quartic_Q(Fraction(-1, 2), 2),
    ]


def landen_symbolic() -> list[Check]:
    out = []
    for a in (Fraction(1, 2), Fraction(1), Fraction(3), Fraction(10)):
        for m in range(9):
            ok = ls.landen_transform(ls.quartic_Q(a, m)) == ls.quartic_Q1(a, m)
            out.append(Check(f"Landen image of Q equals Q1, a={a}, m={m}", ok, 0.0))
    for i, f in enumerate(even_corpus()):
        g = ls.landen_transform(f)
        out.append(Check(f"evenness preserved, corpus[{i}]", g.is_even(), 0.0))
        r = _rel(quad(g.float_evaluator(), rel_tol=1e-13), quad(f.float_evaluator(), rel_tol=1e-13))
        out.append(Check(f"half-line integral preserved, corpus[{i}]", r <= 1e-9, r))
    for m in range(1, 5):
        for n in range(1, 5):
            ok = ls.cot_multiple(m).compose(ls.cot_multiple(n)) == ls.cot_multiple(m * n)
            out.append(Check(f"R_{m} o R_{n} = R_{m * n}", ok, 0.0))
    return out


SUITES: dict[str, Callable[[], list[Check]]] = {
    "identities": identities,
    "convergence": convergence,
    "landen-symbolic": landen_symbolic,
}


def run_suite(name: str) -> list[Check]:
    if name == "all":
        return [c for suite in SUITES.values() for c in suite()]
    return SUITES[name]()
