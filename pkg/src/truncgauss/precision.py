"""Configurable-precision real arithmetic.

A :class:`PrecisionContext` fixes the number of significant decimal digits
used by every computation that receives it. Up to 16 digits the context is
backed by native IEEE doubles; above that it is backed by an independent
``mpmath.MPContext`` so that no process-wide precision setting is touched.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from functools import lru_cache

import mpmath

from .exceptions import InvalidPrecisionError

MIN_DIGITS = 10
NATIVE_DIGITS = 16
# hidden precision carried by multi-precision contexts, matching the
# behaviour of common variable-precision arithmetic packages
DEFAULT_GUARD_DIGITS = 8


@lru_cache(maxsize=None)
def _mp_backend(dps):
    # MPContext instances are never mutated after this point
    ctx = mpmath.MPContext()
    ctx.dps = dps
    return ctx


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision for the pipeline.

    Parameters
    ----------
    digits : int
        Significant decimal digits, at least 10.
    guard_digits : int
        Extra decimal digits carried internally by the multi-precision
        backend. Ignored for native contexts.
    """

    digits: int = NATIVE_DIGITS
    guard_digits: int = DEFAULT_GUARD_DIGITS

    def __post_init__(self):
        if isinstance(self.digits, bool) or not isinstance(self.digits, int):
            raise InvalidPrecisionError(f"digits must be an integer, got {self.digits!r}")
        if self.digits < MIN_DIGITS:
            raise InvalidPrecisionError(f"digits must be >= {MIN_DIGITS}, got {self.digits}")
        if self.guard_digits < 0:
            raise InvalidPrecisionError("guard_digits must be nonnegative")

    @property
    def native(self):
        return self.digits <= NATIVE_DIGITS

    @property
    def working_digits(self):
        return self.digits if self.native else self.digits + self.guard_digits

    @property
    def mp(self):
        """The backing ``MPContext`` (``None`` for native contexts)."""
        if self.native:
            return None
        return _mp_backend(self.working_digits)

    def rel_threshold(self):
        """``10**-working_digits`` in the backend type."""
        if self.native:
            return 10.0 ** (-self.digits)
        return self.mp.mpf(10) ** (-self.working_digits)

    @property
    def eps(self):
        if self.native:
            return 2.0**-52
        return self.mp.eps

    # -- construction ------------------------------------------------------
    def real(self, x):
        """Materialize ``x`` (int, float, str, Fraction, mpf) in this context."""
        if self.native:
            if isinstance(x, Fraction):
                return x.numerator / x.denominator
            return float(x)
        mp = self.mp
        if isinstance(x, Fraction):
            return mp.mpf(x.numerator) / x.denominator
        if isinstance(x, str):
            return mp.mpf(x.strip())
        return mp.mpf(x)

    def pack(self, x):
        """Picklable exact representation of a backend scalar."""
        return x if self.native else x._mpf_

    def unpack(self, raw):
        return raw if self.native else self.mp.make_mpf(raw)

    def tol(self, power):
        """``10**(power - digits)`` as a float, the usual tolerance scale."""
        return 10.0 ** (power - self.digits)

    # -- elementary functions ----------------------------------------------
    def exp(self, x):
        return math.exp(x) if self.native else self.mp.exp(x)

    def log(self, x):
        return math.log(x) if self.native else self.mp.log(x)

    def sqrt(self, x):
        return math.sqrt(x) if self.native else self.mp.sqrt(x)

    def power(self, x, y):
        if self.native:
            return float(x) ** float(y)
        return self.mp.power(x, y)

    def hypot(self, x, y):
        return math.hypot(x, y) if self.native else self.mp.hypot(x, y)

    def gamma(self, x):
        return math.gamma(x) if self.native else self.mp.gamma(x)

    def loggamma(self, x):
        return math.lgamma(x) if self.native else self.mp.loggamma(x)

    def fsum(self, terms):
        if self.native:
            return math.fsum(terms)
        return self.mp.fsum(terms)

    @property
    def pi(self):
        return math.pi if self.native else +self.mp.pi

    # -- output ------------------------------------------------------------
    def round_to_digits(self, x, d):
        return round_to_digits(x, d)


def make_context(digits, guard_digits=DEFAULT_GUARD_DIGITS):
    """Return a :class:`PrecisionContext` with ``digits`` significant digits."""
    return PrecisionContext(digits=digits, guard_digits=guard_digits)


def to_decimal(x):
    """Exact decimal expansion of a float, int, Fraction or mpf."""
    if hasattr(x, "_mpf_"):
        if not mpmath.isfinite(x):
            raise ValueError(f"cannot convert non-finite value {x}")
        sign, man, exp, _ = x._mpf_
        if exp >= 0:
            d = Decimal(man << exp)
        else:
            # string construction is exact, scaleb would round to context
            d = Decimal(f"{man * 5 ** (-exp)}E{exp}")
        return -d if sign else d
    if isinstance(x, Fraction):
        raise TypeError("Fractions have no finite decimal expansion in general")
    return Decimal(x)


def round_to_digits(x, d):
    """Format ``x`` with ``d`` significant digits, rounding half to even.

    Values with a decimal exponent in ``[-5, d)`` are written positionally,
    the rest in ``m.mmme-XX`` form.

    >>> round_to_digits(0.5, 3)
    '0.500'
    """
    if d < 1:
        raise ValueError("d must be positive")
    dec = to_decimal(x)
    if dec == 0:
        return "0." + "0" * (d - 1) if d > 1 else "0"
    with localcontext() as lc:
        lc.prec = d
        lc.rounding = ROUND_HALF_EVEN
        q = +dec
    exponent = q.adjusted()
    sign = "-" if q < 0 else ""
    digits = "".join(map(str, q.as_tuple().digits)).ljust(d, "0")[:d]
    if -5 <= exponent < d:
        if exponent >= 0:
            head = digits[: exponent + 1]
            tail = digits[exponent + 1 :]
            return sign + head + ("." + tail if tail else "")
        return sign + "0." + "0" * (-exponent - 1) + digits
    mant = digits[0] + ("." + digits[1:] if d > 1 else "")
    return f"{sign}{mant}e{exponent:+03d}"
