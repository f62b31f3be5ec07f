import pytest

from truncgauss.chebyshev import truncated_gamma_recurrence
from truncgauss.precision import PrecisionContext
from truncgauss.quadrature import gauss_rule

ACCEPTANCE_LINES = []


def _record(number, ok, detail):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {detail}")


@pytest.fixture
def record_criterion():
    """Callable ``(number, ok, detail)`` that adds a line to the summary."""
    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def ctx16():
    return PrecisionContext(16)


@pytest.fixture(scope="session")
def ctx30():
    return PrecisionContext(30)


@pytest.fixture(scope="session")
def table_1_1_30(ctx30):
    """alpha=1, z=1, N=48 at 30 digits (the printed coefficient tables)."""
    return truncated_gamma_recurrence(1, 1, 48, ctx30)


@pytest.fixture(scope="session")
def rule_1_30_50(ctx30):
    """alpha=1, z=30, N=50 rule at 30 digits."""
    table = truncated_gamma_recurrence(1, 30, 50, ctx30)
    return table, gauss_rule(table)
