import pytest

from automata_logic import Graph

from graphs import load


@pytest.fixture
def fig1() -> Graph:
    return load("fig1")


# one summary line per acceptance criterion, printed after the run

_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    for key, value in report.user_properties:
        if key == "criterion":
            _criteria[value] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_criteria, key=lambda s: int(s.split()[0])):
        terminalreporter.write_line(f"{_criteria[label]}  criterion {label}")
