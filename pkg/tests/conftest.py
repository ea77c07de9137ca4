import time

import pytest

_criteria: dict[int, str] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call":
        item.call_report = report


@pytest.fixture
def criterion(request):
    """Time an acceptance criterion; yields a clock the test checks against its limit."""
    number, title, limit = request.node.get_closest_marker("criterion").args
    start = time.perf_counter()
    yield lambda: time.perf_counter() - start
    elapsed = time.perf_counter() - start
    report = getattr(request.node, "call_report", None)
    ok = report is not None and report.passed
    status = "PASS" if ok else "FAIL"
    line = f"criterion {number}: {status}  {title}  ({elapsed:.2f}s, limit {limit:g}s)"
    _criteria[number] = line
    print("\n" + line)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title, limit): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if _criteria:
        terminalreporter.section("acceptance criteria")
        for number in sorted(_criteria):
            terminalreporter.write_line(_criteria[number])
