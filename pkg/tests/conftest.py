import pytest

from classone.census import certify_exception, exception_forms


@pytest.fixture(scope="session")
def exception_curve():
    """(quadric, cubic) of the class-number-one candidate."""
    return exception_forms()


@pytest.fixture(scope="session")
def certificate():
    return certify_exception().certificate


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, note in sorted(RESULTS):
        line = f"{'PASS' if ok else 'FAIL'}  criterion {label}"
        terminalreporter.write_line(line + (f"  [{note}]" if note else ""))
