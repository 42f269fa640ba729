"""Exception hierarchy shared by every module of the package."""


class LandenError(Exception):
    """Base class for all package errors."""


class DomainError(LandenError, ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class AccuracyError(LandenError, ArithmeticError):
    """Quadrature could not reach the requested tolerance."""


class DivergenceError(LandenError, ArithmeticError):
    """An iteration scheme failed to converge within its step cap."""


class SingularStepError(LandenError, ZeroDivisionError):
    """A parameter map hit a vanishing denominator."""


class SymmetryError(LandenError, RuntimeError):
    """An internal algebraic invariant was violated.

    Raised when an expression that must be symmetric under phi -> -1/phi
    is not; this always indicates a bug, never bad input.
    """
