"""Exact similarity profiles for the drift problem.

The drift problem has a closed solution: in the similarity variable the
concentration is M_mu(eta) normalized by M_mu(0) = 1/Gamma(1-mu).  The two
classical orders reduce to elementary functions (a Gaussian at mu = 1/2, a
rescaled Airy function at mu = 1/3) and serve as fast paths; every other
order goes through the M-Wright series.
"""

import math
from dataclasses import dataclass

from .profiles import FractionalOrder, _mu_value, _require_finite
from .specfun import AIRY_AI_ZERO, airy_ai, gamma, mwright

# cube root of 3, frozen as a literal so the Airy argument is bit-stable
_CBRT3 = 1.4422495703074083

# series-validated range; the M-Wright series loses digits beyond this
_ETA_MAX = 6.0


def _checked_eta(eta):
    eta = _require_finite("eta", eta)
    if eta < 0.0:
        raise ValueError(f"eta must be >= 0, got {eta}")
    return eta


def exact_half(eta):
    """Exact drift profile at mu = 1/2: exp(-eta^2/4)."""
    eta = _checked_eta(eta)
    return math.exp(-0.25 * eta * eta)


def exact_third(eta):
    """Exact drift profile at mu = 1/3: Ai(eta/3^(1/3)) / Ai(0)."""
    eta = _checked_eta(eta)
    return airy_ai(eta / _CBRT3) / AIRY_AI_ZERO


def exact_drift_profile(mu, eta):
    """Normalized exact drift solution M_mu(eta)/M_mu(0) on 0 <= eta <= 6.

    mu = 1/2 and mu = 1/3 take the closed forms above; other orders
    evaluate Gamma(1-mu) * M_mu(eta) by the series.
    """
    mu = _mu_value(mu)
    eta = _checked_eta(eta)
    if eta > _ETA_MAX:
        raise ValueError(
            f"eta = {eta} is outside the series-validated range [0, {_ETA_MAX}]"
        )
    if abs(mu - 0.5) <= 1e-12:
        return exact_half(eta)
    if abs(mu - 1.0 / 3.0) <= 1e-12:
        return exact_third(eta)
    return gamma(1.0 - mu) * mwright(mu, eta)


@dataclass(frozen=True)
class ExactProfile:
    """Callable exact drift profile for a fixed order."""

    mu: FractionalOrder
    normalization: float

    def __post_init__(self):
        if not isinstance(self.mu, FractionalOrder):
            object.__setattr__(self, "mu", FractionalOrder(self.mu))

    @classmethod
    def for_order(cls, mu):
        mu = FractionalOrder(_mu_value(mu))
        return cls(mu=mu, normalization=1.0 / gamma(1.0 - mu.value))

    def __call__(self, eta):
        return exact_drift_profile(self.mu.value, eta)
