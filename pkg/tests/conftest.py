import pytest

from cgoppa import field_make

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def F3():
    return field_make(3)


@pytest.fixture(scope="session")
def F4():
    return field_make(2, 2, [1, 1, 1])


@pytest.fixture(scope="session")
def F5():
    return field_make(5)


@pytest.fixture
def acceptance_log():
    """Collects one pass/fail line per acceptance criterion for the summary."""
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
