import pytest

from jetinv import JetSpace, sl2, sl3

_acceptance_results = []


@pytest.fixture(scope="session")
def J3():
    return JetSpace(1, 1, 3)


@pytest.fixture(scope="session")
def sym():
    """Names -> expressions for the coordinates of J^(10) over R^2."""
    return JetSpace(1, 1, 10).symbols()


@pytest.fixture(scope="session")
def schwarzian(sym):
    u1, u2, u3 = sym["u1"], sym["u2"], sym["u3"]
    return (2 * u1 * u3 - 3 * u2**2) / (2 * u1**4)


@pytest.fixture(scope="session")
def SL2():
    return sl2()


@pytest.fixture(scope="session")
def SL3():
    return sl3()


@pytest.fixture
def criterion(request):
    """Record a named acceptance criterion; the summary prints one line per criterion."""
    entry = {"name": None, "passed": False}

    def record(name):
        entry["name"] = name

    yield record
    if entry["name"] is not None:
        rep = getattr(request.node, "rep_call", None)
        entry["passed"] = rep is not None and rep.passed
        _acceptance_results.append(entry)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for e in _acceptance_results:
        terminalreporter.write_line(f"{'PASS' if e['passed'] else 'FAIL'}  {e['name']}")
