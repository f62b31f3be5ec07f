"""Command-line front end.

Exit codes: 0 success, 2 usage or domain error, 3 numerical failure. On a
nonzero exit a one-line JSON error record is written to stderr.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from . import _validation as val
from .chebyshev import modified_chebyshev, modified_moments
from .exceptions import (
    AccuracyError,
    BreakdownError,
    ConvergenceError,
    DomainError,
    InvalidPrecisionError,
)
from .precision import DEFAULT_GUARD_DIGITS, PrecisionContext, round_to_digits
from .quadrature import gauss_rule, weight_moment
from .recurrence import shifted_jacobi_support
from .zsweep import build_surface, max_relative_error

DIGITS_ENV = "TRUNCGAUSS_DIGITS"
EXIT_USAGE = 2
EXIT_NUMERIC = 3


@dataclass
class Result:
    header: list
    rows: list
    diagnostics: dict
    summary: str
    json_data: object = None
    params: dict = field(default_factory=dict)


class _Stage(Exception):
    def __init__(self, stage, exc):
        super().__init__(str(exc))
        self.stage = stage
        self.exc = exc


def _default_digits():
    raw = os.environ.get(DIGITS_ENV)
    return int(raw) if raw else 16


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", default="0", help="exponent of x, > -1")
    common.add_argument("--n", type=int, default=10, help="number of coefficients / nodes")
    common.add_argument(
        "--digits", type=int, default=_default_digits(),
        help=f"working precision in decimal digits (env {DIGITS_ENV}, default 16)",
    )
    common.add_argument("--guard-digits", type=int, default=DEFAULT_GUARD_DIGITS)
    common.add_argument("--sig", type=int, default=None,
                        help="significant digits written per number (default: --digits)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--output", "-o", default=None, help="data file (default stdout)")
    with_z = argparse.ArgumentParser(add_help=False)
    with_z.add_argument("--z", default="1", help="decay rate z >= 0")

    parser = argparse.ArgumentParser(
        prog="truncgauss",
        description="Gauss quadrature for x^alpha exp(-z x) on [0, 1].",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("moments", parents=[common, with_z], help="modified moments m_0..m_{2n-1}")
    sub.add_parser("recurrence", parents=[common, with_z], help="recurrence coefficients")
    sub.add_parser("gauss", parents=[common, with_z], help="nodes and Christoffel numbers")
    p = sub.add_parser("sweep", parents=[common], help="coefficients over a z grid")
    p.add_argument("--t-max", default="30")
    p.add_argument("--grid-points", type=int, default=90)
    p.add_argument("--grid-step", default=None, help="use 0, step, 2*step, ... <= t-max instead")
    p.add_argument("--n-jobs", type=int, default=1)
    p = sub.add_parser("verify", parents=[common, with_z], help="maximal relative error report")
    p.add_argument("--ref-digits", type=int, default=100)
    p = sub.add_parser("integrate", parents=[common, with_z],
                       help="apply the rule to a polynomial")
    p.add_argument("--coeffs", required=True,
                   help="comma-separated polynomial coefficients, ascending powers")
    return parser


def _context(args):
    val.check_digits(args.digits)
    return PrecisionContext(args.digits, args.guard_digits)


def _fmt(x, sig):
    return round_to_digits(x, sig)


def _table_pipeline(args, ctx):
    val.check_alpha(args.alpha)
    val.check_z(args.z)
    n = val.check_count(args.n)
    try:
        mom = modified_moments(args.alpha, args.z, 2 * n, ctx)
    except (ConvergenceError, ArithmeticError) as exc:
        raise _Stage("moments", exc) from exc
    basis = shifted_jacobi_support(args.alpha, max(2 * n - 1, 1), ctx)
    try:
        table = modified_chebyshev(mom, basis, n)
    except BreakdownError as exc:
        raise _Stage("chebyshev", exc) from exc
    return mom, table


def _params(args, **extra):
    out = {
        "command": args.command,
        "alpha": str(args.alpha),
        "n": args.n,
        "digits": args.digits,
        "guard_digits": args.guard_digits,
    }
    if hasattr(args, "z"):
        out["z"] = str(args.z)
    out.update(extra)
    return out


def cmd_moments(args, ctx, sig):
    val.check_alpha(args.alpha)
    val.check_z(args.z)
    n = val.check_count(args.n)
    try:
        mom = modified_moments(args.alpha, args.z, 2 * n, ctx)
    except ArithmeticError as exc:
        raise _Stage("moments", exc) from exc
    header = ["n", "m"]
    rows = [[k, _fmt(m, sig)] for k, m in enumerate(mom.m)]
    diag = {"terms_used_max": mom.terms_used}
    return Result(header, rows, diag, f"{len(rows)} modified moments")


def cmd_recurrence(args, ctx, sig):
    mom, table = _table_pipeline(args, ctx)
    rows = [[k, _fmt(table.b[k], sig), _fmt(table.a[k], sig)] for k in range(table.N)]
    diag = {"terms_used_max": mom.terms_used}
    return Result(["k", "b", "a"], rows, diag, f"{table.N} recurrence coefficient pairs")


def cmd_gauss(args, ctx, sig):
    mom, table = _table_pipeline(args, ctx)
    try:
        rule = gauss_rule(table)
    except (ConvergenceError, AccuracyError) as exc:
        raise _Stage("eigensolver", exc) from exc
    rows = [[_fmt(x, sig), _fmt(w, sig)] for x, w in zip(rule.nodes, rule.weights)]
    diag = {"terms_used_max": mom.terms_used, "eigensolver_iterations": rule.iterations}
    return Result(["node", "weight"], rows, diag, f"{rule.N}-point rule, mass {_fmt(rule.mass, 10)}")


def cmd_sweep(args, ctx, sig):
    val.check_alpha(args.alpha)
    n = val.check_count(args.n)
    try:
        surf = build_surface(
            args.alpha, args.t_max, args.grid_points, n, ctx,
            step=args.grid_step, n_jobs=args.n_jobs,
        )
    except BreakdownError as exc:
        raise _Stage("chebyshev", exc) from exc
    rows = [
        [_fmt(z, sig), k, _fmt(b, sig), _fmt(a, sig)] for z, k, b, a in surf.rows()
    ]
    diag = {"grid_points": len(surf.grid)}
    extra = {"t_max": str(args.t_max), "grid_points": args.grid_points, "grid_step": args.grid_step}
    return Result(
        ["z", "k", "b", "a"], rows, diag,
        f"{len(surf.grid)} grid points x {n} coefficients", params=extra,
    )


def cmd_verify(args, ctx, sig):
    val.check_alpha(args.alpha)
    val.check_z(args.z)
    n = val.check_count(args.n)
    val.check_digits(args.ref_digits)
    try:
        report = max_relative_error(
            args.alpha, args.z, n, args.digits, args.ref_digits, guard_digits=args.guard_digits
        )
    except BreakdownError as exc:
        raise _Stage("chebyshev", exc) from exc
    err = _fmt(report.max_rel_err, min(sig, 5))
    data = {"max_rel_err": err, "argmax": {"coefficient": report.argmax[0], "k": report.argmax[1]}}
    rows = [[err, report.argmax[0], report.argmax[1]]]
    return Result(
        ["max_rel_err", "coefficient", "k"], rows, {}, f"max relative error {err}",
        json_data=data, params={"ref_digits": args.ref_digits},
    )


def cmd_integrate(args, ctx, sig):
    try:
        coeffs = [ctx.real(c) for c in args.coeffs.split(",")]
    except ValueError as exc:
        raise DomainError(f"bad --coeffs: {exc}") from exc
    mom, table = _table_pipeline(args, ctx)
    try:
        rule = gauss_rule(table)
    except (ConvergenceError, AccuracyError) as exc:
        raise _Stage("eigensolver", exc) from exc

    def poly(x):
        acc = ctx.real(0)
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    quad = ctx.fsum(w * poly(x) for x, w in zip(rule.nodes, rule.weights))
    exact = ctx.fsum(c * weight_moment(args.alpha, args.z, k, ctx) for k, c in enumerate(coeffs))
    relerr = abs(quad - exact) / abs(exact) if exact != 0 else abs(quad - exact)
    rows = [[_fmt(quad, sig), _fmt(exact, sig), _fmt(relerr, min(sig, 5))]]
    return Result(
        ["quad", "exact", "relerr"], rows, {"eigensolver_iterations": rule.iterations},
        f"quad={rows[0][0]} exact={rows[0][1]}", json_data=dict(zip(["quad", "exact", "relerr"], rows[0])),
        params={"coeffs": args.coeffs},
    )


COMMANDS = {
    "moments": cmd_moments,
    "recurrence": cmd_recurrence,
    "gauss": cmd_gauss,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
    "integrate": cmd_integrate,
}


def render(result, params, fmt):
    if fmt == "json":
        data = result.json_data
        if data is None:
            data = [dict(zip(result.header, r)) for r in result.rows]
        doc = {"params": params, "data": data, "diagnostics": result.diagnostics}
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(result.header)
    w.writerows(result.rows)
    return buf.getvalue()


def _fail(code, kind, message, stage=None):
    rec = {"error": kind, "message": message}
    if stage:
        rec["stage"] = stage
    sys.stderr.write(json.dumps(rec) + "\n")
    return code


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        ctx = _context(args)
        sig = args.sig if args.sig is not None else args.digits
        if sig < 1:
            raise DomainError("--sig must be positive")
        result = COMMANDS[args.command](args, ctx, sig)
    except (DomainError, InvalidPrecisionError, ValueError) as exc:
        return _fail(EXIT_USAGE, type(exc).__name__, str(exc))
    except _Stage as exc:
        return _fail(EXIT_NUMERIC, type(exc.exc).__name__, str(exc.exc), exc.stage)
    except ArithmeticError as exc:
        return _fail(EXIT_NUMERIC, type(exc).__name__, str(exc))
    params = _params(args, sig=sig, **result.params)
    text = render(result, params, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        print(f"{args.command}: {result.summary} -> {args.output}")
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
