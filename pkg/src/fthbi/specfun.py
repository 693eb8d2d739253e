"""Special functions: Gamma, its reciprocal, Airy Ai, and the M-Wright family.

Thin validating wrappers over the kernel backend.  The kernels return
(value, status) pairs; these wrappers turn bad statuses into exceptions and
enforce the documented domains.
"""

import math
from dataclasses import dataclass

from ._backend import kernels
from .errors import ConvergenceError

_OK = kernels.OK
_SERIES_CAP = kernels.SERIES_CAP
_CANCELLATION = kernels.CANCELLATION

# Ai(0) and -Ai'(0); the exact-solution normalisations divide by these.
AIRY_AI_ZERO = 0.3550280538878172
AIRY_AIP_ZERO = -0.2588194037928068


def _checked_real(name, value):
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise TypeError(f"{name} must be a real number, got {value!r}")
    v = float(value)
    if not math.isfinite(v):
        raise ValueError(f"{name} must be finite, got {v!r}")
    return v


def gamma(x):
    """Gamma(x) for x > 0."""
    x = _checked_real("x", x)
    if x <= 0.0:
        raise ValueError(f"gamma requires x > 0, got {x}")
    return kernels.gamma_pos(x)


def reciprocal_gamma(x):
    """1/Gamma(x) on the whole real line; exactly 0 at the poles 0, -1, -2, ..."""
    x = _checked_real("x", x)
    return kernels.rgamma(x)


def airy_ai(x):
    """Airy Ai by its Maclaurin pair; accurate on the working window |x| <= 20."""
    x = _checked_real("x", x)
    if abs(x) > 20.0:
        raise ValueError(f"airy_ai is restricted to |x| <= 20, got {x}")
    value, status = kernels.airy_ai(x)
    if status != _OK:
        raise ConvergenceError(
            f"airy_ai series did not settle at x = {x}", value=value
        )
    return value


@dataclass(frozen=True)
class MWrightOrder:
    """Order nu of the M-Wright function, 0 < nu < 1.

    nu = 1/2 and nu = 1/3 are the orders with elementary closed forms
    (Gaussian and Airy); is_half / is_third tag them for fast paths.
    """

    nu: float

    def __post_init__(self):
        v = _checked_real("nu", self.nu)
        if not 0.0 < v < 1.0:
            raise ValueError(f"nu must lie strictly inside (0, 1), got {v}")
        object.__setattr__(self, "nu", v)

    @property
    def is_half(self):
        return abs(self.nu - 0.5) <= 1e-12

    @property
    def is_third(self):
        return abs(self.nu - 1.0 / 3.0) <= 1e-12

    def __float__(self):
        return self.nu


def mwright(order, z):
    """M-Wright function M_nu(z) for z >= 0 by its alternating power series.

    order may be an MWrightOrder or a bare float in (0, 1).  Raises
    ConvergenceError when the series hits its term cap or loses too many
    digits to cancellation (large z at small nu).
    """
    if not isinstance(order, MWrightOrder):
        order = MWrightOrder(order)
    z = _checked_real("z", z)
    if z < 0.0:
        raise ValueError(f"mwright requires z >= 0, got {z}")
    value, err_bound, status = kernels.mwright(order.nu, z)
    if status == _SERIES_CAP:
        raise ConvergenceError(
            f"M-Wright series hit its term cap at nu = {order.nu}, z = {z}",
            value=value,
            estimate=err_bound,
        )
    if status == _CANCELLATION:
        raise ConvergenceError(
            f"M-Wright series lost too much precision to cancellation "
            f"at nu = {order.nu}, z = {z}",
            value=value,
            estimate=err_bound,
        )
    return value
