"""Penetration-depth laws, similarity variables, and profile evaluation.

The approximate solution for both problems is an assumed profile
Theta = (1 - x/delta)^n over a finite penetration depth delta(t).  The
integral balance fixes delta as a power law in time, so everything reduces
to the dimensionless front position lambda and the similarity coordinate
eta = x / (front scale).
"""

import enum
import math
from dataclasses import dataclass, field
from typing import Union

from ._backend import kernels


def _require_finite(name, value):
    if not isinstance(value, (int, float)) or isinstance(value, bool):
        raise TypeError(f"{name} must be a real number, got {value!r}")
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return float(value)


@dataclass(frozen=True)
class FractionalOrder:
    """Validated order mu of the time derivative, 0 < mu < 1."""

    value: float

    def __post_init__(self):
        v = _require_finite("mu", self.value)
        if not 0.0 < v < 1.0:
            raise ValueError(f"mu must lie strictly inside (0, 1), got {v}")
        object.__setattr__(self, "value", v)

    def __float__(self):
        return self.value


def _mu_value(mu):
    """Accept a FractionalOrder or a bare float and return the validated float."""
    if isinstance(mu, FractionalOrder):
        return mu.value
    return FractionalOrder(mu).value


class ProblemKind(enum.Enum):
    SUBDIFFUSION = "subdiffusion"
    DRIFT = "drift"


@dataclass(frozen=True)
class ProblemSpec:
    """One of the two Dirichlet problems.

    coeff is the transport coefficient: a_mu for subdiffusion (its square
    root carries the length scale), V_mu for drift.
    """

    kind: ProblemKind
    mu: float
    coeff: float = 1.0

    def __post_init__(self):
        if not isinstance(self.kind, ProblemKind):
            raise TypeError(f"kind must be a ProblemKind, got {self.kind!r}")
        object.__setattr__(self, "mu", _mu_value(self.mu))
        c = _require_finite("coeff", self.coeff)
        if c <= 0.0:
            raise ValueError(f"coeff must be positive, got {c}")
        object.__setattr__(self, "coeff", c)


def _validate_exponent(n):
    v = _require_finite("n", n)
    if v < 1.0:
        raise ValueError(f"profile exponent must be >= 1, got {v}")
    return v


@dataclass(frozen=True)
class FixedExponent:
    n: float

    def __post_init__(self):
        object.__setattr__(self, "n", _validate_exponent(self.n))


@dataclass(frozen=True)
class HyperbolicExponent:
    """n(eta) = n0 + mu/eta; undefined at eta = 0."""

    n0: float

    def __post_init__(self):
        object.__setattr__(self, "n0", _validate_exponent(self.n0))


@dataclass(frozen=True)
class InverseExponentialExponent:
    """n(eta) = n0 + mu*eta*exp(-eta); well-defined everywhere."""

    n0: float

    def __post_init__(self):
        object.__setattr__(self, "n0", _validate_exponent(self.n0))


ExponentSpec = Union[FixedExponent, HyperbolicExponent, InverseExponentialExponent]


def factor_n(n, mu):
    """Front factor N = n(n+1)Gamma(2-mu).

    Equivalent to n(n+1)(1-mu)Gamma(1-mu); the Gamma(2-mu) form avoids the
    1/(1-mu) blowup as mu -> 1.
    """
    n = _validate_exponent(n)
    mu = _mu_value(mu)
    return n * (n + 1.0) * kernels.gamma_pos(2.0 - mu)


def _lam(kind, mu, n):
    if kind is ProblemKind.SUBDIFFUSION:
        return math.sqrt(2.0 * n * (n + 1.0)) * math.sqrt(
            kernels.gamma_pos(2.0 - mu) / (2.0 - mu)
        )
    return n * (n + 1.0) * kernels.gamma_pos(2.0 - mu)


def front_factor(spec, n):
    """Dimensionless front position lambda = delta(t) / (front scale).

    Subdiffusion: sqrt(2n(n+1)) * sqrt(Gamma(2-mu)/(2-mu)); the second
    factor is the fractional correction to Goodman's classical front.
    Drift: n(n+1)Gamma(2-mu).
    """
    n = _validate_exponent(n)
    return _lam(spec.kind, spec.mu, n)


def penetration_depth(spec, n, t):
    """delta(t): sqrt(a) lambda t^(mu/2) or V lambda t^mu; exactly 0 at t=0."""
    n = _validate_exponent(n)
    t = _require_finite("t", t)
    if t < 0.0:
        raise ValueError(f"t must be >= 0, got {t}")
    lam = _lam(spec.kind, spec.mu, n)
    if spec.kind is ProblemKind.SUBDIFFUSION:
        return math.sqrt(spec.coeff) * lam * math.pow(t, 0.5 * spec.mu)
    return spec.coeff * lam * math.pow(t, spec.mu)


def similarity_eta(spec, x, t):
    """Similarity coordinate: x/(sqrt(a) t^(mu/2)) or x/(V t^mu)."""
    x = _require_finite("x", x)
    t = _require_finite("t", t)
    if x < 0.0:
        raise ValueError(f"x must be >= 0, got {x}")
    if t <= 0.0:
        raise ValueError(f"t must be > 0, got {t}")
    if spec.kind is ProblemKind.SUBDIFFUSION:
        return x / (math.sqrt(spec.coeff) * math.pow(t, 0.5 * spec.mu))
    return x / (spec.coeff * math.pow(t, spec.mu))


def variable_exponent(rule, mu, eta):
    """Pointwise exponent of a variable-order rule.

    Hyperbolic: n0 + mu/eta (pole at eta = 0 is a domain error).
    InverseExponential: n0 + mu*eta*exp(-eta).
    A FixedExponent rule is accepted and returns its constant.
    """
    mu = _mu_value(mu)
    eta = _require_finite("eta", eta)
    if isinstance(rule, FixedExponent):
        return rule.n
    if eta < 0.0:
        raise ValueError(f"eta must be >= 0, got {eta}")
    if isinstance(rule, HyperbolicExponent):
        if eta == 0.0:
            raise ValueError("hyperbolic exponent rule is singular at eta = 0")
        return rule.n0 + mu / eta
    if isinstance(rule, InverseExponentialExponent):
        return rule.n0 + mu * eta * math.exp(-eta)
    raise TypeError(f"unknown exponent rule {rule!r}")


@dataclass(frozen=True)
class SimilarityProfile:
    """Approximate profile Theta(eta) = (1 - eta/lam)^n in similarity form.

    lam is the front position for the base exponent (Fixed n, or n0 of a
    variable rule).  With recompute_lambda (the default) a variable-order
    profile recomputes lam from the local n(eta) at every point; frozen
    mode keeps the base lam everywhere.  Variable rules are meaningful for
    the drift problem only.
    """

    kind: ProblemKind
    mu: float
    exponent: ExponentSpec
    lam: float = field(init=False)
    recompute_lambda: bool = True

    def __post_init__(self):
        if not isinstance(self.kind, ProblemKind):
            raise TypeError(f"kind must be a ProblemKind, got {self.kind!r}")
        object.__setattr__(self, "mu", _mu_value(self.mu))
        if isinstance(
            self.exponent, (HyperbolicExponent, InverseExponentialExponent)
        ):
            if self.kind is not ProblemKind.DRIFT:
                raise ValueError("variable-order exponents apply to the drift problem only")
            base_n = self.exponent.n0
        elif isinstance(self.exponent, FixedExponent):
            base_n = self.exponent.n
        else:
            raise TypeError(f"unknown exponent rule {self.exponent!r}")
        object.__setattr__(self, "lam", _lam(self.kind, self.mu, base_n))


def _pointwise_n_lam(profile, eta):
    if isinstance(profile.exponent, FixedExponent):
        return profile.exponent.n, profile.lam
    n_loc = variable_exponent(profile.exponent, profile.mu, eta)
    if profile.recompute_lambda:
        return n_loc, _lam(profile.kind, profile.mu, n_loc)
    return n_loc, profile.lam


def _power_cell(base, n, mode):
    """(base)^n under the two evaluation modes; base = 1 - eta/lam.

    Clamped is the physical solution (zero beyond the front).  Raw keeps
    the power alive past the front: integer n (|n - round(n)| < 1e-9) gives
    a real signed value, anything else is undefined and returns None.
    """
    if mode == "clamped":
        if base <= 0.0:
            return 0.0
        return math.pow(base, n)
    if base >= 0.0:
        return math.pow(base, n)
    m = math.floor(n + 0.5)
    if abs(n - m) < 1e-9:
        return math.pow(base, m)
    return None


def eval_profile(profile, eta, mode="clamped"):
    """Evaluate the profile at eta.

    Clamped mode is the physical solution: max(0, 1-eta/lam)^n, zero beyond
    the front.  Raw mode continues the power past the front, which is how
    the summary tables report it: negative bases are kept for integer n and
    reported as None (undefined) otherwise.
    """
    eta = _require_finite("eta", eta)
    if eta < 0.0:
        raise ValueError(f"eta must be >= 0, got {eta}")
    if mode not in ("clamped", "raw"):
        raise ValueError(f"mode must be 'clamped' or 'raw', got {mode!r}")
    n, lam = _pointwise_n_lam(profile, eta)
    return _power_cell(1.0 - eta / lam, n, mode)


def front_correction(mu):
    """Fractional front correction sqrt(Gamma(2-mu)/(2-mu)).

    The subdiffusion front is sqrt(2n(n+1)) times this factor, so it
    captures the whole mu dependence; it tends to 1 in the classical limit
    mu -> 1 and shrinks the front as mu decreases.
    """
    mu = _mu_value(mu)
    return math.sqrt(kernels.gamma_pos(2.0 - mu) / (2.0 - mu))


def n_s_fit(mu):
    """Fitted optimal-exponent law for the subdiffusion profile.

    A Gaussian-in-mu correlation with frozen constants; a convenience
    lookup, not a substitute for running the optimizer.
    """
    mu = _mu_value(mu)
    return 1.256 + 0.224 * math.exp(-((mu - 0.264) ** 2) / 4.303)
