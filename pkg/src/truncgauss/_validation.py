"""Argument checks shared by the estimators and the CLI."""
import numbers

import numpy as np
from sklearn.utils import check_array

from .exceptions import DomainError, InvalidPrecisionError
from .precision import MIN_DIGITS


def check_alpha(alpha):
    if not isinstance(alpha, (numbers.Real, str)) or float(alpha) <= -1:
        raise DomainError(f"alpha must be a real number > -1, got {alpha!r}")
    return alpha


def check_z(z):
    if not isinstance(z, (numbers.Real, str)) or float(z) < 0:
        raise DomainError(f"z must be a real number >= 0, got {z!r}")
    return z


def check_count(n, name="n", minimum=1):
    if isinstance(n, bool) or not isinstance(n, numbers.Integral) or n < minimum:
        raise DomainError(f"{name} must be an integer >= {minimum}, got {n!r}")
    return int(n)


def check_digits(digits):
    if isinstance(digits, bool) or not isinstance(digits, numbers.Integral):
        raise InvalidPrecisionError(f"digits must be an integer, got {digits!r}")
    if digits < MIN_DIGITS:
        raise InvalidPrecisionError(f"digits must be >= {MIN_DIGITS}, got {digits}")
    return int(digits)


def check_z_values(X):
    """Coerce z samples (shape ``(n,)`` or ``(n, 1)``) to a 1-D float array."""
    X = check_array(X, ensure_2d=False, dtype=np.float64)
    if X.ndim == 2:
        if X.shape[1] != 1:
            raise ValueError(f"expected a single z feature, got {X.shape[1]} columns")
        X = X[:, 0]
    if np.any(X < 0):
        raise DomainError("z values must be nonnegative")
    return X


def check_poly_coefficients(X):
    """Rows of ascending-power polynomial coefficients as a 2-D array."""
    return check_array(X, ensure_2d=False, dtype=np.float64).reshape(-1, np.shape(X)[-1])
