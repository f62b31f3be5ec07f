"""Gauss quadrature for the truncated Gamma weight ``x**alpha * exp(-z*x)`` on ``[0, 1]``.

Recurrence coefficients come from modified moments in the shifted Jacobi
``(0, alpha)`` basis and the modified Chebyshev algorithm, at a
configurable number of decimal digits.

>>> from truncgauss import PrecisionContext, truncated_gamma_recurrence, gauss_rule
>>> table = truncated_gamma_recurrence(1, 1, 3, PrecisionContext(16))
>>> rule = gauss_rule(table)
>>> round(float(sum(rule.weights)), 12)
0.264241117657
"""
from .chebyshev import modified_chebyshev, modified_moments, truncated_gamma_recurrence
from .estimators import CoefficientSurfaceRegressor, TruncatedGammaGauss
from .exceptions import (
    AccuracyError,
    BreakdownError,
    ConvergenceError,
    DomainError,
    InvalidPrecisionError,
)
from .precision import PrecisionContext, make_context, round_to_digits
from .quadrature import QuadratureRule, exactness_check, gauss_rule, weights_via_kernel
from .recurrence import RecurrenceTable, cd_kernel, eval_monic, shifted_jacobi_support
from .specialfn import hyp1f1, lower_incomplete_gamma
from .zsweep import build_surface, max_relative_error

__version__ = "0.1.0"

__all__ = [
    "AccuracyError",
    "BreakdownError",
    "CoefficientSurfaceRegressor",
    "ConvergenceError",
    "DomainError",
    "InvalidPrecisionError",
    "PrecisionContext",
    "QuadratureRule",
    "RecurrenceTable",
    "TruncatedGammaGauss",
    "build_surface",
    "cd_kernel",
    "eval_monic",
    "exactness_check",
    "gauss_rule",
    "hyp1f1",
    "lower_incomplete_gamma",
    "make_context",
    "max_relative_error",
    "modified_chebyshev",
    "modified_moments",
    "round_to_digits",
    "shifted_jacobi_support",
    "truncated_gamma_recurrence",
    "weights_via_kernel",
]
