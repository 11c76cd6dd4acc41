"""Exception hierarchy shared by all casifric modules."""


class CasifricError(Exception):
    """Base class for every error raised by this package."""


class UnitError(CasifricError):
    """Arithmetic or conversion between incompatible unit tags."""


class DomainError(CasifricError, ValueError):
    """Input outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation exactly on a pole (zero frequency, resonance, plasmon)."""


class MaterialError(CasifricError):
    """Material record cannot support the requested operation."""


class ValidityError(CasifricError):
    """A leading-order formula was asked for outside its validity window."""


class ValidityWarning(UserWarning):
    """Non-strict counterpart of :class:`ValidityError`."""


class QuadratureError(CasifricError):
    """Numerical integration failed outright (e.g. NaN from the integrand)."""


class ConvergenceError(QuadratureError):
    """Quadrature did not reach the requested tolerance.

    Carries the best available estimate in ``estimate`` so callers can
    decide whether to proceed anyway.
    """

    def __init__(self, message, estimate=None, error_estimate=None):
        super().__init__(message)
        self.estimate = estimate
        self.error_estimate = error_estimate
