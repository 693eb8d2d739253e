"""Integral-balance solutions of time-fractional subdiffusion and drift equations.

An assumed profile (1 - x/delta)^n over a finite penetration depth turns
each fractional PDE into a closed penetration-depth law; the profile
exponent is then calibrated against residual functionals and exact
M-Wright-function solutions.
"""

from ._backend import backend_name
from .calibrate import (
    CalibrationResult,
    ErrorReport,
    best_fixed_exponent_drift,
    error_functional_drift,
    error_functional_sub,
    minimize_scalar,
    optimize_exponent_sub,
    residual_drift,
    residual_sub,
    variable_order_report,
)
from .errors import CalibrationError, ConvergenceError, FthbiError, QuadratureError
from .fracops import (
    GIntegral,
    SelfSimilarDerivative,
    ft_hbi_approx_derivative,
    g_integral,
    rl_derivative_power,
    rl_derivative_selfsimilar,
    rl_power_rule,
)
from .oracle import ExactProfile, exact_drift_profile, exact_half, exact_third
from .profiles import (
    FixedExponent,
    FractionalOrder,
    HyperbolicExponent,
    InverseExponentialExponent,
    ProblemKind,
    ProblemSpec,
    SimilarityProfile,
    eval_profile,
    factor_n,
    front_correction,
    front_factor,
    n_s_fit,
    penetration_depth,
    similarity_eta,
    variable_exponent,
)
from .specfun import MWrightOrder, airy_ai, gamma, mwright, reciprocal_gamma

__version__ = "0.1.0"

__all__ = [
    "CalibrationError",
    "CalibrationResult",
    "ConvergenceError",
    "ErrorReport",
    "ExactProfile",
    "FixedExponent",
    "FractionalOrder",
    "FthbiError",
    "GIntegral",
    "HyperbolicExponent",
    "InverseExponentialExponent",
    "MWrightOrder",
    "ProblemKind",
    "ProblemSpec",
    "QuadratureError",
    "SelfSimilarDerivative",
    "SimilarityProfile",
    "__version__",
    "airy_ai",
    "backend_name",
    "best_fixed_exponent_drift",
    "error_functional_drift",
    "error_functional_sub",
    "eval_profile",
    "exact_drift_profile",
    "exact_half",
    "exact_third",
    "factor_n",
    "front_correction",
    "front_factor",
    "ft_hbi_approx_derivative",
    "g_integral",
    "gamma",
    "minimize_scalar",
    "mwright",
    "n_s_fit",
    "optimize_exponent_sub",
    "penetration_depth",
    "reciprocal_gamma",
    "residual_drift",
    "residual_sub",
    "rl_derivative_power",
    "rl_derivative_selfsimilar",
    "rl_power_rule",
    "similarity_eta",
    "variable_exponent",
]
