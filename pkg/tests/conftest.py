import pytest

from latticebasis.matrix import IntMatrix

# (criterion, verdict, detail) lines collected by test_acceptance
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n, verdict, detail in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line("[%s] criterion %2d: %s" % (verdict, n, detail))


def cols(*columns):
    return IntMatrix.from_columns(columns)


@pytest.fixture
def gens4():
    """Generators (6,3), (1,5), (2,4), (4,4)."""
    return cols((6, 3), (1, 5), (2, 4), (4, 4))


@pytest.fixture
def basis15():
    return cols((6, 3), (1, 3))
