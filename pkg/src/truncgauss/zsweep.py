"""Coefficient curves over a z grid and the conditioning harness."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np
from joblib import Parallel, delayed
from scipy.interpolate import CubicSpline

from .chebyshev import truncated_gamma_recurrence
from .exceptions import BreakdownError, DomainError
from .precision import PrecisionContext
from .recurrence import RecurrenceTable


def cubic_spline_not_a_knot(xs, ys):
    """Not-a-knot cubic spline through ``(xs, ys)``; needs 4+ points."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.ndim != 1 or xs.shape != ys.shape[:1]:
        raise DomainError("xs must be 1-D and match the leading axis of ys")
    if xs.size < 4:
        raise DomainError("not-a-knot spline needs at least 4 points")
    if np.any(np.diff(xs) <= 0):
        raise DomainError("xs must be strictly ascending without duplicates")
    return CubicSpline(xs, ys, bc_type="not-a-knot")


def z_grid(T, points=90, step=None, ctx=None):
    """Equidistant grid on ``[0, T]``.

    With ``step`` given the grid is ``0, step, 2*step, ...`` up to ``T``
    and ``points`` is ignored.
    """
    ctx = ctx or PrecisionContext()
    T = ctx.real(T)
    if not T > 0:
        raise DomainError("T must be positive")
    if step is not None:
        step = ctx.real(step)
        if not step > 0:
            raise DomainError("step must be positive")
        n = int(float(T / step) + 1e-9)
        grid = [j * step for j in range(n + 1)]
    else:
        if points < 4:
            raise DomainError("need at least 4 grid points")
        grid = [j * T / (points - 1) for j in range(points)]
    return grid


def _table_job(alpha, z_raw, N, ctx):
    z = ctx.unpack(z_raw)
    try:
        t = truncated_gamma_recurrence(alpha, z, N, ctx)
    except BreakdownError as exc:
        raise exc.with_z(float(z)) from None
    return [ctx.pack(v) for v in t.b], [ctx.pack(v) for v in t.a]


def compute_tables(alpha, zs, N, ctx, n_jobs=1):
    """Recurrence tables for each z, returned in grid order."""
    jobs = (delayed(_table_job)(alpha, ctx.pack(ctx.real(z)), N, ctx) for z in zs)
    if n_jobs == 1:
        raw = [fn(*args, **kw) for fn, args, kw in jobs]
    else:
        raw = Parallel(n_jobs=n_jobs)(jobs)
    alpha = ctx.real(alpha)
    return [
        RecurrenceTable(
            alpha, ctx.real(z), [ctx.unpack(v) for v in b], [ctx.unpack(v) for v in a], ctx
        )
        for z, (b, a) in zip(zs, raw)
    ]


@dataclass
class CoefficientSurface:
    """Recurrence coefficients as smooth functions of z.

    ``b_spline`` and ``a_spline`` interpolate all indices at once; column
    ``k`` of their output is ``b_k(z)`` resp. ``a_k(z)`` (``a_0`` is the
    mass).
    """

    alpha: Any
    grid: tuple
    tables: list
    b_spline: CubicSpline = field(repr=False)
    a_spline: CubicSpline = field(repr=False)

    @property
    def N(self):
        return self.tables[0].N

    def b(self, z, k=None):
        out = self.b_spline(z)
        return out if k is None else out[..., k]

    def a(self, z, k=None):
        out = self.a_spline(z)
        return out if k is None else out[..., k]

    def rows(self):
        """Long-form ``(z, k, b_k, a_k)`` rows in grid order."""
        for t in self.tables:
            for k in range(t.N):
                yield t.z, k, t.b[k], t.a[k]


def build_surface(alpha, T, points, N, ctx=None, step=None, n_jobs=1):
    """Tables on an equidistant z grid plus one spline per coefficient."""
    ctx = ctx or PrecisionContext()
    if N < 1:
        raise DomainError("N must be at least 1")
    grid = z_grid(T, points, step, ctx)
    tables = compute_tables(alpha, grid, N, ctx, n_jobs=n_jobs)
    zs = np.array([float(z) for z in grid])
    B = np.array([[float(v) for v in t.b] for t in tables])
    A = np.array([[float(v) for v in t.a] for t in tables])
    return CoefficientSurface(
        ctx.real(alpha),
        tuple(grid),
        tables,
        cubic_spline_not_a_knot(zs, B),
        cubic_spline_not_a_knot(zs, A),
    )


@dataclass(frozen=True)
class ErrorReport:
    alpha: Any
    z: Any
    N: int
    digits: int
    ref_digits: int
    max_rel_err: float
    argmax: tuple

    def as_dict(self):
        return {
            "alpha": float(self.alpha),
            "z": float(self.z),
            "N": self.N,
            "digits": self.digits,
            "ref_digits": self.ref_digits,
            "max_rel_err": self.max_rel_err,
            "argmax": {"coefficient": self.argmax[0], "k": self.argmax[1]},
        }


def compare_tables(table, reference):
    """Largest relative deviation of ``table`` from ``reference``.

    Returns ``(max_rel_err, (kind, k))`` with ``kind`` in ``{"b", "a"}``.
    """
    if table.N != reference.N:
        raise DomainError("tables have different lengths")
    rctx = reference.ctx
    worst, where = rctx.real(0), ("b", 0)
    for k in range(reference.N):
        for kind, x, y in (("b", table.b[k], reference.b[k]), ("a", table.a[k], reference.a[k])):
            err = abs((rctx.real(x) - y) / y)
            if err > worst:
                worst, where = err, (kind, k)
    return float(worst), where


def max_relative_error(alpha, z, N, digits=16, ref_digits=100, guard_digits=None):
    """Maximal relative error of a ``digits`` run against a ``ref_digits`` run."""
    if ref_digits < digits:
        raise DomainError("ref_digits must not be below digits")
    kw = {} if guard_digits is None else {"guard_digits": guard_digits}
    ctx = PrecisionContext(digits, **kw)
    ref_ctx = PrecisionContext(ref_digits)
    reference = truncated_gamma_recurrence(alpha, z, N, ref_ctx)
    if digits == ref_digits and ctx == ref_ctx:
        table = reference
    else:
        table = truncated_gamma_recurrence(alpha, z, N, ctx)
    err, where = compare_tables(table, reference)
    return ErrorReport(ref_ctx.real(alpha), ref_ctx.real(z), N, digits, ref_digits, err, where)
