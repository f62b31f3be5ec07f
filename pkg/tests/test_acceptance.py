"""Acceptance criteria, one test per criterion.

Each test records a ``[PASS]``/``[FAIL]`` line that is printed in the
terminal summary, then asserts the criterion with its stated tolerance.
"""
import csv

import mpmath
import numpy as np
import pytest

from reference_values import A_Z1, B_Z1, GAUSS_50, MAX_REL_ERR_16
from truncgauss import cli
from truncgauss.chebyshev import truncated_gamma_recurrence
from truncgauss.precision import PrecisionContext, round_to_digits
from truncgauss.quadrature import exactness_check, gauss_rule, weights_via_kernel
from truncgauss.zsweep import build_surface, compare_tables, cubic_spline_not_a_knot

Z_BANDS = (5, 10, 15, 20, 25, 30)


def _cli_rows(tmp_path, *argv):
    path = tmp_path / "out.csv"
    assert cli.main([*argv, "--output", str(path)]) == 0
    with open(path, newline="") as fh:
        return list(csv.reader(fh))[1:]


def _max_rel(pairs):
    """Largest ``|got/want - 1|`` over string pairs, evaluated at 50 digits."""
    with mpmath.workdps(50):
        return max(abs(mpmath.mpf(g) / mpmath.mpf(w) - 1) for g, w in pairs)


# -- 1 -----------------------------------------------------------------------
def test_criterion_01_coefficient_tables(tmp_path, capsys, record_criterion):
    rows = _cli_rows(tmp_path, "recurrence", "--alpha", "1", "--z", "1", "--n", "48", "--digits", "30")
    capsys.readouterr()
    assert len(rows) == 48
    err_b = _max_rel((r[1], want) for r, want in zip(rows, B_Z1))
    err_a = _max_rel((r[2], want) for r, want in zip(rows, A_Z1))
    ok = err_b <= 1e-14 and err_a <= 1e-14
    record_criterion(1, ok, f"96 printed coefficients, max rel dev b {float(err_b):.2e}, a {float(err_a):.2e} (tol 1e-14)")
    assert ok


# -- 2 -----------------------------------------------------------------------
def _gauss_deviation(tmp_path, z):
    rows = _cli_rows(tmp_path, "gauss", "--alpha", "1", "--z", str(z), "--n", "50", "--digits", "30")
    assert len(rows) == 50
    nodes = _max_rel((r[0], want[0]) for r, want in zip(rows, GAUSS_50))
    weights = _max_rel((r[1], want[1]) for r, want in zip(rows, GAUSS_50))
    return float(nodes), float(weights), rows


def test_criterion_02_gauss_table(tmp_path, capsys, record_criterion):
    dev_x, dev_w, _ = _gauss_deviation(tmp_path, 1)
    capsys.readouterr()
    ok = dev_x <= 2e-4 and dev_w <= 2e-4
    record_criterion(
        2, ok,
        f"z=1 rule vs printed nodes/weights: max rel dev nodes {dev_x:.2e}, weights {dev_w:.2e} (tol 2e-4)",
    )
    assert ok


def test_criterion_02_companion_z30(tmp_path, capsys, record_criterion):
    # the printed weights sum to ~1.11e-3, the z=30 mass; at z=1 the mass is 0.264
    dev_x, dev_w, rows = _gauss_deviation(tmp_path, 30)
    capsys.readouterr()
    extreme = round_to_digits(PrecisionContext(30).real(rows[-1][1]), 5)
    ok = dev_x <= 2e-4 and dev_w <= 2e-4 and extreme == GAUSS_50[-1][1]
    record_criterion(
        2, ok,
        f"companion: same table vs z=30 rule, max rel dev nodes {dev_x:.2e}, weights {dev_w:.2e}, "
        f"extreme weight {extreme}",
    )
    assert ok


# -- 3 -----------------------------------------------------------------------
@pytest.fixture(scope="module")
def conditioning():
    ctx16, ctx30, ref = PrecisionContext(16), PrecisionContext(30), PrecisionContext(100)
    out = {}
    for z in Z_BANDS:
        reference = truncated_gamma_recurrence(1, z, 50, ref)
        e16 = compare_tables(truncated_gamma_recurrence(1, z, 50, ctx16), reference)[0]
        e30 = compare_tables(truncated_gamma_recurrence(1, z, 50, ctx30), reference)[0]
        out[z] = (e16, e30)
    return out


@pytest.mark.slow
def test_criterion_03_conditioning_bands(conditioning, record_criterion):
    e16 = [conditioning[z][0] for z in Z_BANDS]
    e30 = [conditioning[z][1] for z in Z_BANDS]
    in_band = all(MAX_REL_ERR_16[z] / 100 <= e <= MAX_REL_ERR_16[z] * 100 for z, e in zip(Z_BANDS, e16))
    monotone = all(x <= y for x, y in zip(e16, e16[1:]))
    tight = all(e <= 1e-28 for e in e30)
    ok = in_band and monotone and tight
    detail = ", ".join(f"z={z}: {e:.1e}" for z, e in zip(Z_BANDS, e16))
    record_criterion(
        3, ok,
        f"digits=16 errors {detail}; in band {in_band}, nondecreasing {monotone}; "
        f"digits=30 max {max(e30):.1e} (tol 1e-28)",
    )
    assert ok


# -- 4 -----------------------------------------------------------------------
def _definitional(alpha, z, N, dps=50):
    """Stieltjes procedure with every inner product an adaptive quadrature.

    ``x = t**2`` turns the weight into ``2 t**(2 alpha + 1) exp(-z t**2)``,
    smooth on ``[0, 1]`` for every alpha used here, so tanh-sinh reaches
    full working precision.
    """
    with mpmath.workdps(dps):
        alpha, z = mpmath.mpf(alpha), mpmath.mpf(z)
        b, a = [], []

        def p(k, x):
            prev, cur = mpmath.mpf(0), mpmath.mpf(1)
            for j in range(k):
                cur, prev = (x - b[j]) * cur - (a[j] * prev if j else 0), cur
            return cur

        def inner(f):
            return mpmath.quad(
                lambda t: f(t * t) * 2 * t ** (2 * alpha + 1) * mpmath.exp(-z * t * t), [0, 1]
            )

        prev_norm = None
        for k in range(N):
            norm = inner(lambda x: p(k, x) ** 2)
            b.append(inner(lambda x: x * p(k, x) ** 2) / norm)
            a.append(norm if k == 0 else norm / prev_norm)
            prev_norm = norm
        return b, a


@pytest.mark.slow
def test_criterion_04_oracle_equivalence(record_criterion):
    ctx = PrecisionContext(50)
    worst = 0.0
    for alpha in ("-0.5", "0", "1", "2.5"):
        for z in ("0", "0.5", "1", "10"):
            table = truncated_gamma_recurrence(ctx.real(alpha), ctx.real(z), 8, ctx)
            b_ref, a_ref = _definitional(alpha, z, 8)
            with mpmath.workdps(60):
                for k in range(8):
                    worst = max(
                        worst,
                        float(abs(table.b[k] - b_ref[k]) / abs(b_ref[k])),
                        float(abs(table.a[k] - a_ref[k]) / abs(a_ref[k])),
                    )
    ok = worst <= 1e-40
    record_criterion(4, ok, f"N=8, 16 (alpha, z) pairs vs definitional coefficients: max rel dev {worst:.1e} (tol 1e-40)")
    assert ok


# -- 5 -----------------------------------------------------------------------
def test_criterion_05_exactness(record_criterion):
    ctx = PrecisionContext(16)
    parts, ok = [], True
    for N in (2, 5, 10):
        table = truncated_gamma_recurrence(1, 1, N, ctx)
        rule = gauss_rule(table)
        exact_err = max(exactness_check(rule, table, k)[2] for k in range(2 * N))
        first_bad = exactness_check(rule, table, 2 * N)[2]
        ok_n = exact_err <= 1e-12 and first_bad >= 1e-6
        ok = ok and ok_n
        parts.append(f"N={N}: k<2N {exact_err:.1e}, k=2N {first_bad:.1e}")
    record_criterion(5, ok, "; ".join(parts) + " (need <=1e-12 and >=1e-6)")
    assert ok


# -- 6 -----------------------------------------------------------------------
def test_criterion_06_weight_duality(record_criterion):
    ctx = PrecisionContext(30)
    worst = 0.0
    for z in (1, 10):
        table = truncated_gamma_recurrence(1, z, 20, ctx)
        rule = gauss_rule(table)
        for w, wk in zip(rule.weights, weights_via_kernel(table, rule)):
            worst = max(worst, float(abs(w - wk) / w))
    ok = worst <= 1e-8
    record_criterion(6, ok, f"eigenvector vs kernel weights, N=20, z in {{1, 10}}: max rel dev {worst:.1e} (tol 1e-8)")
    assert ok


# -- 7 -----------------------------------------------------------------------
def test_criterion_07_normalization(record_criterion):
    ctx = PrecisionContext(16)
    worst = 0.0
    for alpha in (-0.5, 0, 1, 2.5):
        for z in (0.1, 0.5, 1, 2, 5, 10):
            rule = gauss_rule(truncated_gamma_recurrence(alpha, z, 20, ctx))
            with mpmath.workdps(40):
                exact = mpmath.gammainc(alpha + 1, 0, z) / mpmath.mpf(z) ** (alpha + 1)
                worst = max(worst, float(abs(mpmath.fsum(rule.weights) / exact - 1)))
    ok = worst <= 1e-12
    record_criterion(7, ok, f"sum of weights vs incomplete gamma mass, N=20, z<=10: max rel dev {worst:.1e} (tol 1e-12)")
    assert ok


# -- 8 -----------------------------------------------------------------------
@pytest.mark.slow
def test_criterion_08_asymptotic_limits(record_criterion):
    ctx = PrecisionContext(40)
    parts, ok = [], True
    for z in (1, 30):
        t = truncated_gamma_recurrence(1, z, 200, ctx)
        da = float(abs(t.a[199] - ctx.real(1) / 16))
        db = float(abs(t.b[199] - ctx.real(1) / 2))
        ok = ok and da <= 1e-4 and db <= 1e-4
        parts.append(f"z={z}: |a_199-1/16| {da:.1e}, |b_199-1/2| {db:.1e}")
    record_criterion(8, ok, "; ".join(parts) + " (tol 1e-4)")
    assert ok


# -- 9 -----------------------------------------------------------------------
def test_criterion_09_interlacing(record_criterion):
    ctx = PrecisionContext(16)
    table = truncated_gamma_recurrence(1, 1, 16, ctx)
    rules = {N: gauss_rule(table.truncate(N)) for N in range(5, 17)}
    interlace = all(
        all(rules[N + 1].nodes[i] < rules[N].nodes[i] < rules[N + 1].nodes[i + 1] for i in range(N))
        for N in range(5, 16)
    )
    positive = all(w > 0 for r in rules.values() for w in r.weights)
    ok = interlace and positive
    record_criterion(9, ok, f"N=5..15 vs N+1: strict interlacing {interlace}, all weights positive {positive}")
    assert ok


# -- 10 ----------------------------------------------------------------------
def test_criterion_10_spline_fidelity(record_criterion):
    ctx = PrecisionContext(16)
    surface = build_surface(1, 30, 90, 2, ctx)
    grid = np.array([float(z) for z in surface.grid])
    rng = np.random.default_rng(0)
    zs = rng.uniform(0, 30, 20)
    assert not np.any(np.isin(zs, grid))
    dev = max(abs(float(surface.b(z, 0)) - truncated_gamma_recurrence(1, z, 1, ctx).b[0]) for z in zs)

    cubic = lambda x: 0.02 * x**3 - 0.7 * x**2 + 3 * x - 1
    spline = cubic_spline_not_a_knot(grid, cubic(grid))
    fine = np.linspace(0, 30, 2001)
    cubic_dev = np.max(np.abs(spline(fine) - cubic(fine))) / np.max(np.abs(cubic(fine)))
    ok = dev <= 1e-6 and cubic_dev <= 1e-12
    record_criterion(
        10, ok,
        f"b_0 spline vs direct at 20 random z: max abs dev {dev:.1e} (tol 1e-6); "
        f"global cubic reproduced to rel {cubic_dev:.1e}",
    )
    assert ok
