"""scikit-learn style wrappers around the quadrature pipeline."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from . import _validation as val
from .chebyshev import modified_chebyshev, modified_moments
from .precision import DEFAULT_GUARD_DIGITS, PrecisionContext
from .quadrature import gauss_rule
from .recurrence import shifted_jacobi_support
from .zsweep import build_surface, compute_tables, cubic_spline_not_a_knot


class TruncatedGammaGauss(BaseEstimator):
    """Gauss rule for ``x**alpha * exp(-z*x)`` on ``[0, 1]``.

    ``fit`` ignores its arguments; all inputs are hyperparameters. After
    fitting, ``nodes_``/``weights_`` are float arrays while ``rule_`` and
    ``recurrence_`` keep values at full working precision.

    Parameters
    ----------
    alpha : float, default=0.0
        Exponent of ``x``; must exceed -1.
    z : float, default=1.0
        Decay rate, ``z >= 0``.
    n_nodes : int, default=10
    digits : int, default=16
        Working precision; above 16 multi-precision arithmetic is used.
    guard_digits : int, default=8
        Hidden extra digits for multi-precision runs.

    Examples
    --------
    >>> est = TruncatedGammaGauss(alpha=1, z=1, n_nodes=2).fit()
    >>> round(float(est.predict([[0, 0, 0, 1]])[0]), 7)  # int_0^1 x^3 * x e^{-x} dx
    0.0878363
    """

    def __init__(self, alpha=0.0, z=1.0, n_nodes=10, digits=16, guard_digits=DEFAULT_GUARD_DIGITS):
        self.alpha = alpha
        self.z = z
        self.n_nodes = n_nodes
        self.digits = digits
        self.guard_digits = guard_digits

    def _context(self):
        return PrecisionContext(val.check_digits(self.digits), self.guard_digits)

    def fit(self, X=None, y=None):
        val.check_alpha(self.alpha)
        val.check_z(self.z)
        n = val.check_count(self.n_nodes, "n_nodes")
        ctx = self._context()
        mom = modified_moments(self.alpha, self.z, 2 * n, ctx)
        basis = shifted_jacobi_support(self.alpha, max(2 * n - 1, 1), ctx)
        self.moments_ = mom
        self.recurrence_ = modified_chebyshev(mom, basis, n)
        self.rule_ = gauss_rule(self.recurrence_)
        self.b_ = np.array([float(v) for v in self.recurrence_.b])
        self.a_ = np.array([float(v) for v in self.recurrence_.a])
        self.nodes_ = np.array([float(v) for v in self.rule_.nodes])
        self.weights_ = np.array([float(v) for v in self.rule_.weights])
        self.mass_ = float(self.recurrence_.mass)
        return self

    def predict(self, X):
        """Integrate polynomials given as rows of ascending coefficients."""
        check_is_fitted(self, "rule_")
        C = val.check_poly_coefficients(X)
        V = np.vander(self.nodes_, C.shape[1], increasing=True)
        return C @ (V.T @ self.weights_)

    def integrate(self, func):
        """Apply the rule to a vectorized callable."""
        check_is_fitted(self, "rule_")
        return float(np.dot(self.weights_, func(self.nodes_)))


class CoefficientSurfaceRegressor(BaseEstimator):
    """Recurrence coefficients as functions of ``z`` via not-a-knot splines.

    ``fit`` takes the z grid (at least 4 distinct values), computes one
    recurrence table per grid point and interpolates every coefficient.
    ``predict`` returns an array of shape ``(n_samples, 2 * n_coeffs)``
    laid out as ``[b_0 .. b_{N-1}, a_0 .. a_{N-1}]``.
    """

    def __init__(self, alpha=1.0, n_coeffs=10, digits=16, guard_digits=DEFAULT_GUARD_DIGITS, n_jobs=1):
        self.alpha = alpha
        self.n_coeffs = n_coeffs
        self.digits = digits
        self.guard_digits = guard_digits
        self.n_jobs = n_jobs

    def fit(self, X, y=None):
        val.check_alpha(self.alpha)
        n = val.check_count(self.n_coeffs, "n_coeffs")
        zs = np.sort(val.check_z_values(X))
        ctx = PrecisionContext(val.check_digits(self.digits), self.guard_digits)
        return self._fit_tables(compute_tables(self.alpha, list(zs), n, ctx, n_jobs=self.n_jobs))

    def _fit_tables(self, tables):
        self.tables_ = tables
        self.grid_ = np.array([float(t.z) for t in tables])
        B = np.array([[float(v) for v in t.b] for t in tables])
        A = np.array([[float(v) for v in t.a] for t in tables])
        self.spline_ = cubic_spline_not_a_knot(self.grid_, np.hstack([B, A]))
        self.n_features_in_ = 1
        return self

    @classmethod
    def from_grid(cls, alpha, T, points, n_coeffs, digits=16, n_jobs=1, step=None):
        """Fit on the equidistant grid used by :func:`build_surface`."""
        ctx = PrecisionContext(val.check_digits(digits))
        surf = build_surface(alpha, T, points, n_coeffs, ctx, step=step, n_jobs=n_jobs)
        est = cls(alpha=alpha, n_coeffs=n_coeffs, digits=digits, n_jobs=n_jobs)
        return est._fit_tables(surf.tables)

    def predict(self, X):
        check_is_fitted(self, "spline_")
        return self.spline_(val.check_z_values(X))

    def predict_b(self, X):
        return self.predict(X)[:, : self.n_coeffs]

    def predict_a(self, X):
        return self.predict(X)[:, self.n_coeffs :]
