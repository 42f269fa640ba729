"""Closed forms, Landen transformations and quadrature checks for the
quartic integral int_0^oo dx / (x^4 + 2a x^2 + 1)^(m+1)."""

from .errors import (
    AccuracyError,
    DivergenceError,
    DomainError,
    LandenError,
    SingularStepError,
    SymmetryError,
)
from .exact import (
    PiRational,
    QuarticClosedForm,
    T_poly,
    beta_half_integer,
    binom_identity_check,
    binomial,
    check_phi_identity,
    check_recurrence,
    d_coeff,
    d_coeff_oracle,
    even_moment,
    fib_sum_identity_check,
    hypergeom_2f1_terminating,
    pochhammer,
    poly_P,
    quartic_exact,
    quartic_value,
    quartic_via_2f1,
    sqrt_quartic,
)
from .landen_numeric import (
    ConvergenceReport,
    LandenState2,
    LandenState6,
    agm,
    elliptic_G,
    estimate_order,
    landen_iterate2,
    landen_iterate6,
    landen_step2,
    landen_step6,
)
from .landen_symbolic import (
    cot_multiple,
    landen_transform,
    landen_transform_general,
    quartic_Q,
    quartic_Q1,
    quartic_via_landen,
)
from .poly import LaurentPoly, Poly, RationalFunction
from .quadrature import (
    Finite,
    HalfLine,
    IntegrandSpec,
    WholeLine,
    check_gh_derivative,
    check_ramanujan,
    check_vanishing_odd,
    integrate,
)

__version__ = "0.1.0"
