"""Exception types raised by the solvers."""


class CIMError(Exception):
    """Base class for every error raised by this package."""


class DomainError(CIMError, ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class QuadratureError(CIMError, ArithmeticError):
    """Adaptive quadrature did not reach the requested tolerance.

    Attributes
    ----------
    value : float
        Best estimate returned by the integrator.
    achieved_error : float
        Error estimate actually reached.
    """

    def __init__(self, message, value=float("nan"), achieved_error=float("nan")):
        super().__init__(message)
        self.value = value
        self.achieved_error = achieved_error


class EigensolverError(CIMError, ArithmeticError):
    """An eigensolver failed to converge."""


class FitError(CIMError, ValueError):
    """Too few points (or degenerate data) for a least-squares fit."""
