import pytest

CRITERIA = {
    1: "bound columns of the comparison table",
    2: "covering radii of the comparison table",
    3: "sine-log-square sum sandwich sweep",
    4: "unit-norm dominance sweeps",
    5: "totient upper bound sweep",
    6: "covering radius vs successive minima",
    7: "lattice engine oracles",
    8: "bound_new identity",
    9: "unit-vector integrity",
}

_outcomes: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number): acceptance criterion this test belongs to")
    config.addinivalue_line("markers", "slow: takes more than a few seconds")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.skipped:
        return
    if rep.when == "call" or rep.failed:
        _outcomes.setdefault(mark.args[0], []).append(rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        results = _outcomes.get(number)
        if results is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(results) else "FAIL"
        passed = sum(results or [])
        terminalreporter.write_line(
            f"[{status}] criterion {number}: {CRITERIA[number]} ({passed}/{len(results or [])} checks)")
