"""Exception types raised by the numerical layer."""


class FthbiError(Exception):
    """Base class for all package-specific errors."""


class ConvergenceError(FthbiError):
    """A series failed to converge to working precision.

    Carries the partial value and the estimated error bound so callers can
    inspect how far the evaluation got.
    """

    def __init__(self, message, value=None, estimate=None):
        super().__init__(message)
        self.value = value
        self.estimate = estimate


class QuadratureError(FthbiError):
    """An adaptive quadrature stopped before reaching its tolerance."""

    def __init__(self, message, value=None, estimate=None):
        super().__init__(message)
        self.value = value
        self.estimate = estimate


class CalibrationError(FthbiError):
    """Exponent calibration could not locate an interior minimum."""
