"""Pochhammer symbol, Gamma, lower incomplete gamma and 1F1 series.

All functions take a :class:`~truncgauss.precision.PrecisionContext` and
return scalars of that context's backend type.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .exceptions import ConvergenceError, DomainError
from .precision import PrecisionContext

_CONSECUTIVE_SMALL = 3


@dataclass(frozen=True)
class SeriesResult:
    value: Any
    terms_used: int
    converged: bool


def max_terms(ctx, z):
    """Term budget for a series summed at argument ``z``."""
    return int(10 * ctx.working_digits + 200 * (1 + abs(float(z))))


def pochhammer(a, k):
    """Rising factorial ``a (a+1) ... (a+k-1)``.

    Uses the iterated product so negative non-integer ``a`` needs no pole
    handling. Works for floats, mpf and ``Fraction`` alike.
    """
    if k < 0:
        raise DomainError(f"pochhammer needs k >= 0, got {k}")
    result = a * 0 + 1
    for j in range(k):
        result = result * (a + j)
    return result


def _sum_positive_series(first, ratio, ctx, z, what):
    """Sum ``first + first*r(0) + first*r(0)*r(1) + ...``.

    Stops once ``_CONSECUTIVE_SMALL`` successive terms are each below
    ``10**-working_digits`` relative to the partial sum.
    """
    threshold = ctx.rel_threshold()
    cap = max_terms(ctx, z)
    term = first
    total = first
    small = 0
    k = 0
    while k < cap:
        term = term * ratio(k)
        total = total + term
        k += 1
        if abs(term) <= threshold * abs(total):
            small += 1
            if small >= _CONSECUTIVE_SMALL:
                return SeriesResult(total, k + 1, True)
        else:
            small = 0
    raise ConvergenceError(f"{what} did not converge in {cap} terms", terms_used=k + 1)


def hyp1f1(a, b, z, ctx=None):
    """Confluent hypergeometric series ``1F1(a; b; z)`` for ``z >= 0``.

    Returns a :class:`SeriesResult`; ``terms_used`` counts summed terms.
    """
    ctx = ctx or PrecisionContext()
    a, b, z = ctx.real(a), ctx.real(b), ctx.real(z)
    if b <= 0 and b == int(b):
        raise DomainError(f"1F1 undefined for nonpositive integer b={b}")
    if z < 0:
        raise DomainError("1F1 series is only used for z >= 0")
    one = ctx.real(1)
    if z == 0:
        return SeriesResult(one, 1, True)
    return _sum_positive_series(
        one, lambda k: (a + k) / ((b + k) * (k + 1)) * z, ctx, z, "1F1"
    )


def lower_incomplete_gamma(a, z, ctx=None):
    r"""Lower incomplete gamma :math:`\int_0^z x^{a-1} e^{-x}\,dx`.

    Summed as ``z**a * exp(-z) * sum_k z**k / (a)_{k+1}``.
    """
    ctx = ctx or PrecisionContext()
    a, z = ctx.real(a), ctx.real(z)
    if a <= 0:
        raise DomainError(f"lower incomplete gamma needs a > 0, got {a}")
    if z < 0:
        raise DomainError(f"lower incomplete gamma needs z >= 0, got {z}")
    if z == 0:
        return ctx.real(0)
    series = _sum_positive_series(
        1 / a, lambda k: z / (a + k + 1), ctx, z, "incomplete gamma"
    )
    return ctx.power(z, a) * ctx.exp(-z) * series.value


def gamma_fn(a, ctx=None):
    """Gamma function for ``a > 0``."""
    ctx = ctx or PrecisionContext()
    a = ctx.real(a)
    if a <= 0:
        raise DomainError(f"gamma_fn needs a > 0, got {a}")
    return ctx.gamma(a)
