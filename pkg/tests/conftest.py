import pytest

from alexandroff import validate_space

_acceptance = []


@pytest.fixture
def sierpinski():
    return validate_space(["a", "b"], [[], ["a"], ["a", "b"]])


@pytest.fixture
def indiscrete_pair():
    return validate_space(["x", "y"], [[], ["x", "y"]])


@pytest.fixture
def discrete_pair():
    return validate_space(["x", "y"], [[], ["x"], ["y"], ["x", "y"]])


@pytest.fixture
def discrete3():
    return validate_space([0, 1, 2], [[], [0], [1], [2], [0, 1], [0, 2], [1, 2], [0, 1, 2]])


@pytest.fixture
def chain3():
    return validate_space([0, 1, 2], [[], [0], [0, 1], [0, 1, 2]])


def pytest_runtest_logreport(report):
    if report.when != "call" or "acceptance_id" not in dict(report.user_properties):
        return
    props = dict(report.user_properties)
    _acceptance.append((props["acceptance_id"], props["acceptance_title"], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, outcome, duration in sorted(_acceptance):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"[{verdict}] criterion {num}: {title} ({duration:.2f}s)")
