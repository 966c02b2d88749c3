import pytest

from arcinterp.solvers import solve
from arcinterp.verification import TABLE_ANGLES, table_arc

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def table_solutions():
    """Solver output for every (degree, tabulated angle), computed once."""
    return {(n, label): solve(table_arc(m, k), n) for n in (2, 3, 4) for label, m, k in TABLE_ANGLES}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
