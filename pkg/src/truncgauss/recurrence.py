"""Three-term recurrences for monic orthogonal polynomials.

Polynomials follow ``x P_n = P_{n+1} + b_n P_n + a_n P_{n-1}`` with
``P_{-1} = 0`` and ``P_0 = 1``. In every table ``a[0]`` holds the total
mass of the measure rather than the (unused) zero of the recursion.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .exceptions import DomainError
from .precision import PrecisionContext


@dataclass(frozen=True)
class RecurrenceTable:
    """Coefficients ``b[0..N-1]`` and ``a[0..N-1]`` of a weight.

    ``a[0]`` is the mass ``m_0``; ``a[k]`` for ``k >= 1`` are the usual
    positive recurrence coefficients.
    """

    alpha: Any
    z: Any
    b: tuple
    a: tuple
    ctx: PrecisionContext = field(default_factory=PrecisionContext)

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise ValueError("b and a must have the same length")
        object.__setattr__(self, "b", tuple(self.b))
        object.__setattr__(self, "a", tuple(self.a))

    @property
    def N(self):
        return len(self.b)

    @property
    def digits(self):
        return self.ctx.digits

    @property
    def mass(self):
        return self.a[0]

    def truncate(self, n):
        if not 1 <= n <= self.N:
            raise ValueError(f"cannot truncate a table of length {self.N} to {n}")
        return RecurrenceTable(self.alpha, self.z, self.b[:n], self.a[:n], self.ctx)

    def norms(self):
        """Squared norms ``<u, P_k^2> = a_0 a_1 ... a_k``."""
        out = []
        acc = self.ctx.real(1)
        for ak in self.a:
            acc = acc * ak
            out.append(acc)
        return out


@dataclass(frozen=True)
class SupportBasis:
    """Recurrence of the auxiliary polynomials used by modified moments."""

    alpha: Any
    frak_b: tuple
    frak_a: tuple

    def __len__(self):
        return len(self.frak_b)


def _check_jacobi_params(alpha_j, beta_j):
    if alpha_j <= -1 or beta_j <= -1:
        raise DomainError(f"Jacobi parameters must exceed -1, got ({alpha_j}, {beta_j})")


def jacobi_coeffs(alpha_j, beta_j, n, ctx=None):
    """Monic Jacobi recurrence coefficients ``(b_n, a_n)`` on ``[-1, 1]``.

    The weight is ``(1-x)**alpha_j * (1+x)**beta_j``. For ``n = 0`` the
    returned ``a_0`` is the mass of that weight.
    """
    ctx = ctx or PrecisionContext()
    al, be = ctx.real(alpha_j), ctx.real(beta_j)
    _check_jacobi_params(al, be)
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    s = al + be
    if n == 0:
        b = (be - al) / (s + 2)
        a = (
            ctx.power(2, s + 1)
            * ctx.gamma(al + 1)
            * ctx.gamma(be + 1)
            / ctx.gamma(s + 2)
        )
        return b, a
    if s == 0:
        b = ctx.real(0)
    else:
        b = (be * be - al * al) / ((2 * n + 2 + s) * (2 * n + s))
    if n == 1:
        # the (n + alpha + beta) factor cancels against (2n - 1 + alpha + beta)
        a = 4 * (1 + al) * (1 + be) / ((2 + s) ** 2 * (3 + s))
    else:
        t = 2 * n + s
        a = 4 * (n + be) * (n + s) * (n + al) * n / ((t - 1) * t * t * (t + 1))
    return b, a


def shifted_jacobi_support(alpha, count, ctx=None):
    """Monic shifted Jacobi ``(0, alpha)`` recurrence on ``[0, 1]``.

    These polynomials are orthogonal for ``x**alpha`` on ``[0, 1]``; their
    coefficients are the ``[-1, 1]`` ones pushed through ``x -> (x+1)/2``.
    """
    ctx = ctx or PrecisionContext()
    alpha = ctx.real(alpha)
    _check_jacobi_params(0, alpha)
    if count < 1:
        raise DomainError("count must be at least 1")
    fb, fa = [], []
    for k in range(count):
        b, a = jacobi_coeffs(0, alpha, k, ctx)
        fb.append((b + 1) / 2)
        fa.append(1 / (alpha + 1) if k == 0 else a / 4)
    return SupportBasis(alpha, tuple(fb), tuple(fa))


def _monic_values(b, a, n, x):
    """Values ``P_0(x) .. P_n(x)`` by forward recurrence."""
    p_prev = x * 0
    p = x * 0 + 1
    vals = [p]
    for k in range(n):
        # a_0 multiplies P_{-1} = 0, so the stored mass never enters
        p, p_prev = (x - b[k]) * p - (a[k] * p_prev if k else 0), p
        vals.append(p)
    return vals


def eval_monic(table, n, x):
    """Degree-``n`` monic orthogonal polynomial of ``table`` at ``x``."""
    if not 0 <= n <= table.N:
        raise IndexError(f"degree {n} outside 0..{table.N}")
    x = table.ctx.real(x)
    return _monic_values(table.b, table.a, n, x)[n]


def cd_kernel(table, n, x, y):
    """Christoffel-Darboux kernel ``K_n(x, y)`` by explicit summation."""
    if not 0 <= n < table.N:
        raise IndexError(f"kernel index {n} outside 0..{table.N - 1}")
    ctx = table.ctx
    x, y = ctx.real(x), ctx.real(y)
    px = _monic_values(table.b, table.a, n, x)
    py = px if x == y else _monic_values(table.b, table.a, n, y)
    norms = table.norms()
    return ctx.fsum(px[k] * py[k] / norms[k] for k in range(n + 1))
