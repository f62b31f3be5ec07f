"""Gauss rules from recurrence tables (Golub-Welsch).

The symmetric Jacobi matrix is diagonalized by implicit-shift QL with a
Wilkinson shift. Only the first row of the eigenvector matrix is carried
along since that is all the Christoffel numbers need.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .exceptions import AccuracyError, ConvergenceError, DomainError
from .recurrence import cd_kernel
from .specialfn import lower_incomplete_gamma


@dataclass(frozen=True)
class SymTridiagonal:
    diag: tuple
    offdiag: tuple

    @property
    def N(self):
        return len(self.diag)


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes in ascending order with their positive weights."""

    alpha: Any
    z: Any
    nodes: tuple
    weights: tuple
    mass: Any
    iterations: int = field(default=0, compare=False)

    @property
    def N(self):
        return len(self.nodes)

    def __call__(self, f):
        """Apply the rule to a callable."""
        return sum(w * f(x) for x, w in zip(self.nodes, self.weights))


def symmetrize(table):
    """Symmetric Jacobi matrix ``diag = b``, ``offdiag[k] = sqrt(a[k+1])``."""
    ctx = table.ctx
    off = []
    for k in range(1, table.N):
        if not table.a[k] > 0:
            raise DomainError(f"a[{k}] = {table.a[k]} is not positive")
        off.append(ctx.sqrt(table.a[k]))
    return SymTridiagonal(tuple(table.b), tuple(off))


def _sign(a, b):
    return abs(a) if b >= 0 else -abs(a)


def tridiagonal_ql(diag, offdiag, ctx, max_iter=None):
    """Eigenvalues and first eigenvector components of a symmetric
    tridiagonal matrix.

    Returns ``(eigenvalues, first_components, iterations)`` in the order the
    QL sweep leaves them (unsorted).
    """
    n = len(diag)
    d = list(diag)
    e = list(offdiag) + [ctx.real(0)]
    zrow = [ctx.real(1)] + [ctx.real(0)] * (n - 1)
    eps = ctx.eps
    cap = max_iter if max_iter is not None else 50 * ctx.working_digits
    total = 0
    one = ctx.real(1)
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                if abs(e[m]) <= eps * (abs(d[m]) + abs(d[m + 1])):
                    break
                m += 1
            if m == l:
                break
            it += 1
            if it > cap:
                raise ConvergenceError(
                    f"QL iteration did not converge for eigenvalue {l}", index=l
                )
            g = (d[l + 1] - d[l]) / (2 * e[l])
            r = ctx.hypot(g, one)
            g = d[m] - d[l] + e[l] / (g + _sign(r, g))
            s = c = one
            p = ctx.real(0)
            i = m - 1
            underflow = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = ctx.hypot(f, g)
                e[i + 1] = r
                if r == 0:
                    d[i + 1] -= p
                    e[m] = ctx.real(0)
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                f = zrow[i + 1]
                zrow[i + 1] = s * zrow[i] + c * f
                zrow[i] = c * zrow[i] - s * f
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = ctx.real(0)
        total += it
    return d, zrow, total


def eigen_nodes_weights(T, mass, ctx, alpha=None, z=None):
    """Gauss nodes and weights from a symmetric Jacobi matrix.

    ``weights[k] = mass * v_k[0]**2`` with ``v_k`` the unit eigenvector of
    ``nodes[k]``.

    Raises
    ------
    AccuracyError
        If two nodes coincide to working precision or a weight vanishes.
    """
    if not mass > 0:
        raise DomainError("mass must be positive")
    if T.N == 1:
        return QuadratureRule(alpha, z, (T.diag[0],), (mass,), mass, 0)
    evals, first, iters = tridiagonal_ql(T.diag, T.offdiag, ctx)
    order = sorted(range(T.N), key=lambda i: evals[i])
    nodes = tuple(evals[i] for i in order)
    weights = tuple(mass * first[i] * first[i] for i in order)
    gap = ctx.tol(1)
    for k in range(1, T.N):
        scale = max(abs(nodes[k]), abs(nodes[k - 1]))
        if not nodes[k] - nodes[k - 1] > gap * scale:
            raise AccuracyError(f"nodes {k - 1} and {k} coincide at this precision")
    for k, w in enumerate(weights):
        if not w > 0:
            raise AccuracyError(f"weight {k} underflowed to {w}")
    return QuadratureRule(alpha, z, nodes, weights, mass, iters)


def gauss_rule(table):
    """N-point Gauss rule for a recurrence table."""
    return eigen_nodes_weights(
        symmetrize(table), table.mass, table.ctx, alpha=table.alpha, z=table.z
    )


def weight_moment(alpha, z, k, ctx):
    """Exact ``int_0^1 x**k x**alpha exp(-z x) dx``."""
    alpha, z = ctx.real(alpha), ctx.real(z)
    s = alpha + k + 1
    if z == 0:
        return 1 / s
    return lower_incomplete_gamma(s, z, ctx) / ctx.power(z, s)


def exactness_check(rule, table, k):
    """Compare the rule on ``x**k`` with the exact weighted moment.

    Returns ``(quad, exact, relerr)``.
    """
    if k < 0:
        raise DomainError("k must be nonnegative")
    ctx = table.ctx
    quad = ctx.fsum(w * x**k for x, w in zip(rule.nodes, rule.weights))
    exact = weight_moment(table.alpha, table.z, k, ctx)
    return quad, exact, abs(quad - exact) / abs(exact)


def weights_via_kernel(table, rule):
    """Christoffel numbers ``1 / K_{N-1}(x_k, x_k)``."""
    if rule.N != table.N:
        raise DomainError("rule and table sizes differ")
    n = table.N - 1
    return tuple(1 / cd_kernel(table, n, x, x) for x in rule.nodes)
