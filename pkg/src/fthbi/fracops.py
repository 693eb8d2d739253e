"""Riemann-Liouville operators on the assumed profile.

In similarity variables the fractional time derivative of the profile
(1 - eta/lam)^n collapses to t^(-mu) * D(eta), where D is built from the
memory integral

    G(eta) = 1/(1-mu) * integral over the disturbed history of
             (1 - (eta/lam) s^(-p))^n (1 - s)^(-mu) ds,

with p = mu/2 for subdiffusion and p = mu for drift.  The history starts
where the front first reached the point (the medium ahead of the front is
undisturbed), which is what keeps G finite.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

from ._backend import kernels
from .errors import QuadratureError
from .profiles import ProblemKind, ProblemSpec, _mu_value, _require_finite

_OK = kernels.OK

_KIND_CODE = {
    ProblemKind.SUBDIFFUSION: kernels.SUB,
    ProblemKind.DRIFT: kernels.DRIFT,
}

_STATUS_TEXT = {
    kernels.PANEL_LIMIT: "panel budget exhausted",
    kernels.DEPTH_LIMIT: "panel width floor reached",
}


def _status_message(what, status):
    reason = _STATUS_TEXT.get(status, f"status {status}")
    return f"{what}: quadrature did not meet the requested tolerance ({reason})"


def _check_point_args(kind, mu, n, lam, eta):
    if not isinstance(kind, ProblemKind):
        raise TypeError(f"kind must be a ProblemKind, got {kind!r}")
    mu = _mu_value(mu)
    n = _require_finite("n", n)
    if n < 1.0:
        raise ValueError(f"profile exponent must be >= 1, got {n}")
    lam = _require_finite("lam", lam)
    if lam <= 0.0:
        raise ValueError(f"lam must be positive, got {lam}")
    eta = _require_finite("eta", eta)
    if eta < 0.0:
        raise ValueError(f"eta must be >= 0, got {eta}")
    if eta > lam:
        raise ValueError(
            f"eta = {eta} lies beyond the front lam = {lam}; "
            "the memory integral is defined on 0 <= eta <= lam"
        )
    return mu, n, lam, eta


class GIntegral(NamedTuple):
    """Memory integral G and its eta-derivative, with the achieved bound."""

    g: float
    g_prime: float
    error_bound: float


def g_integral(kind, mu, n, lam, eta, *, abs_tol=1e-10, rel_tol=1e-12):
    """Evaluate (G(eta), G'(eta)) for the given problem kind.

    G(0) = 1/(1-mu) exactly; G vanishes at the front eta = lam.  The
    error_bound is the quadrature's own estimate for G; halving the
    tolerances moves the result by less than this bound.
    """
    mu, n, lam, eta = _check_point_args(kind, mu, n, lam, eta)
    g, gp, err, status = kernels.g_pair(
        _KIND_CODE[kind], mu, n, lam, eta, abs_tol, rel_tol
    )
    if status != _OK:
        raise QuadratureError(
            _status_message("g_integral", status), value=g, estimate=err
        )
    return GIntegral(g, gp, err)


@dataclass(frozen=True)
class SelfSimilarDerivative:
    """Similarity coefficient of the fractional time derivative.

    The physical derivative at (x, t) with eta = similarity_eta(x, t) is
    t^(-mu) * value_coefficient; the coefficient itself is time-free.
    """

    value_coefficient: float
    eta: float
    g_value: float
    g_prime: float


def rl_derivative_selfsimilar(kind, mu, n, lam, eta, *, abs_tol=1e-10, rel_tol=1e-12):
    """D(eta) = ((1-mu) G - p eta G') / Gamma(1-mu), p = mu/2 or mu.

    At eta = 0 this is 1/Gamma(1-mu) exactly (the boundary value held at 1
    since t = 0); at the front it vanishes for n > 1.
    """
    mu, n, lam, eta = _check_point_args(kind, mu, n, lam, eta)
    d, g, gp, err, status = kernels.d_value(
        _KIND_CODE[kind], mu, n, lam, eta, abs_tol, rel_tol
    )
    if status != _OK:
        raise QuadratureError(
            _status_message("rl_derivative_selfsimilar", status),
            value=d,
            estimate=err,
        )
    return SelfSimilarDerivative(
        value_coefficient=d, eta=eta, g_value=g, g_prime=gp
    )


def rl_power_rule(mu, beta, t):
    """Analytic fractional derivative of t^beta:
    Gamma(beta+1)/Gamma(beta+1-mu) * t^(beta-mu)."""
    mu = _mu_value(mu)
    beta = _require_finite("beta", beta)
    t = _require_finite("t", t)
    if beta <= 0.0:
        raise ValueError(f"beta must be positive, got {beta}")
    if t <= 0.0:
        raise ValueError(f"t must be positive, got {t}")
    ratio = kernels.gamma_pos(beta + 1.0) * kernels.rgamma(beta + 1.0 - mu)
    return ratio * math.pow(t, beta - mu)


def rl_derivative_power(mu, beta, t, *, abs_tol=1e-12, rel_tol=1e-12):
    """Fractional derivative of t^beta by direct quadrature of the memory
    integral; validates the machinery against rl_power_rule to ~1e-6
    relative or better."""
    mu = _mu_value(mu)
    beta = _require_finite("beta", beta)
    t = _require_finite("t", t)
    if beta <= 0.0:
        raise ValueError(f"beta must be positive, got {beta}")
    if t <= 0.0:
        raise ValueError(f"t must be positive, got {t}")
    value, err, status = kernels.rl_power_value(mu, beta, t, abs_tol, rel_tol)
    if status != _OK:
        raise QuadratureError(
            _status_message("rl_derivative_power", status),
            value=value,
            estimate=err,
        )
    return value


def ft_hbi_approx_derivative(spec, n, t):
    """Integrated fractional time term of the balance, in closed form.

    With delta = C t^p (p = mu/2 or mu), the integral of the fractional
    derivative of the profile over [0, delta] reduces to
    C (1 + p - mu) t^(p-mu) / (Gamma(1-mu) (1-mu) (n+1)).  For the drift
    problem p = mu makes the time dependence drop out and the value is
    exactly coeff * n; for subdiffusion it decays like t^(-mu/2).
    """
    if not isinstance(spec, ProblemSpec):
        raise TypeError(f"spec must be a ProblemSpec, got {spec!r}")
    n = _require_finite("n", n)
    if n < 1.0:
        raise ValueError(f"profile exponent must be >= 1, got {n}")
    t = _require_finite("t", t)
    if t <= 0.0:
        raise ValueError(f"t must be positive, got {t}")
    mu = spec.mu
    if spec.kind is ProblemKind.SUBDIFFUSION:
        p = 0.5 * mu
        front_scale = math.sqrt(spec.coeff)
    else:
        p = mu
        front_scale = spec.coeff
    lam = kernels.gamma_pos(2.0 - mu)
    if spec.kind is ProblemKind.SUBDIFFUSION:
        lam = math.sqrt(2.0 * n * (n + 1.0)) * math.sqrt(lam / (2.0 - mu))
    else:
        lam = n * (n + 1.0) * lam
    c = front_scale * lam
    numer = c * (1.0 + p - mu) * math.pow(t, p - mu)
    denom = (1.0 - mu) * (n + 1.0)
    return numer * kernels.rgamma(1.0 - mu) / denom
