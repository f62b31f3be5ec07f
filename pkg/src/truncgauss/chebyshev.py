"""Modified moments of ``x**alpha * exp(-z x)`` on ``[0, 1]`` and the
modified Chebyshev algorithm that turns them into recurrence coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .exceptions import BreakdownError, DomainError
from .precision import PrecisionContext
from .recurrence import RecurrenceTable, shifted_jacobi_support
from .specialfn import hyp1f1, lower_incomplete_gamma


@dataclass(frozen=True)
class ModifiedMomentVector:
    """Moments ``m_n = int_0^1 pi_n(x) x**alpha exp(-z x) dx``.

    ``pi_n`` are the monic shifted Jacobi ``(0, alpha)`` polynomials.
    """

    alpha: Any
    z: Any
    m: tuple
    ctx: PrecisionContext
    terms_used: int = 0

    def __len__(self):
        return len(self.m)

    @property
    def digits(self):
        return self.ctx.digits


def _check_weight_params(alpha, z):
    if alpha <= -1:
        raise DomainError(f"alpha must exceed -1, got {alpha}")
    if z < 0:
        raise DomainError(f"z must be nonnegative, got {z}")


def _moment_prefactor(alpha, z, n):
    """``n! z**n / ((alpha+n+1)_n**2 (alpha+2n+1))`` as a running product.

    Each factor ``j z / (alpha+n+j)**2`` is O(1) or smaller, so the product
    neither overflows nor underflows before the true value does.
    """
    p = z * 0 + 1
    for j in range(1, n + 1):
        d = alpha + n + j
        p = p * (j * z) / (d * d)
    return p / (alpha + 2 * n + 1)


def modified_moments(alpha, z, count, ctx=None):
    """First ``count`` modified moments of the truncated Gamma weight."""
    ctx = ctx or PrecisionContext()
    alpha, z = ctx.real(alpha), ctx.real(z)
    _check_weight_params(alpha, z)
    if count < 1:
        raise DomainError("count must be at least 1")
    zero = ctx.real(0)
    if z == 0:
        m = [1 / (alpha + 1)] + [zero] * (count - 1)
        return ModifiedMomentVector(alpha, z, tuple(m), ctx, 0)
    m0 = lower_incomplete_gamma(alpha + 1, z, ctx) / ctx.power(z, alpha + 1)
    m = [m0]
    ez = ctx.exp(-z)
    terms = 0
    for n in range(1, count):
        series = hyp1f1(n + 1, alpha + 2 * n + 2, z, ctx)
        terms = max(terms, series.terms_used)
        val = _moment_prefactor(alpha, z, n) * ez * series.value
        m.append(-val if n % 2 else val)
    return ModifiedMomentVector(alpha, z, tuple(m), ctx, terms)


def modified_chebyshev(mom, basis, N):
    """Recurrence coefficients from ``2N`` modified moments.

    Only two rows of mixed moments ``sigma[k, l]`` are kept. The returned
    table stores the mass ``m_0`` in ``a[0]``.

    Raises
    ------
    BreakdownError
        If some ``sigma[k, k]`` is not positive.
    """
    if N < 1:
        raise DomainError("N must be at least 1")
    if len(mom) < 2 * N:
        raise DomainError(f"need {2 * N} moments, got {len(mom)}")
    if len(basis) < 2 * N - 1 and N > 1:
        raise DomainError(f"need {2 * N - 1} support coefficients, got {len(basis)}")
    ctx = mom.ctx
    m = mom.m
    fb, fa = basis.frak_b, basis.frak_a
    zero = ctx.real(0)
    if not m[0] > 0:
        raise BreakdownError(0, m[0])

    L = 2 * N
    sig_older = [zero] * L
    sig_prev = list(m[:L])
    b = [fb[0] + m[1] / m[0]]
    a = [m[0]]
    a_prev = zero  # the recursion's own a_0
    for k in range(1, N):
        sig = [zero] * L
        bk1 = b[k - 1]
        for ell in range(k, L - k):
            sig[ell] = (
                sig_prev[ell + 1]
                - (bk1 - fb[ell]) * sig_prev[ell]
                - a_prev * sig_older[ell]
                + fa[ell] * sig_prev[ell - 1]
            )
        if not sig[k] > 0:
            raise BreakdownError(k, sig[k])
        b.append(fb[k] - sig_prev[k] / sig_prev[k - 1] + sig[k + 1] / sig[k])
        a_prev = sig[k] / sig_prev[k - 1]
        a.append(a_prev)
        sig_older, sig_prev = sig_prev, sig
    return RecurrenceTable(mom.alpha, mom.z, tuple(b), tuple(a), ctx)


def truncated_gamma_recurrence(alpha, z, N, ctx=None):
    """Recurrence table for ``x**alpha exp(-z x)`` on ``[0, 1]``."""
    ctx = ctx or PrecisionContext()
    mom = modified_moments(alpha, z, 2 * N, ctx)
    basis = shifted_jacobi_support(alpha, max(2 * N - 1, 1), ctx)
    return modified_chebyshev(mom, basis, N)
