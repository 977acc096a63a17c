import pytest

from latdual.formats import parse_antichain, parse_base

FIG1_BASE = "elements 1 2 3 4\nimp 1 3 -> 2\nimp 4 -> 3\n"
FIG1_BPLUS = "set 1\nset 2 3\n"
FIG1_BMINUS = "set 1 2\nset 3 4\n"


@pytest.fixture
def fig1():
    return parse_base(FIG1_BASE)


@pytest.fixture
def fig1_bplus(fig1):
    return parse_antichain(FIG1_BPLUS, fig1)


def S(base, text):
    """Set from a compact name string, e.g. S(fig1, "123")."""
    return base.set_of(*text)


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "acceptance" in report.keywords:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
