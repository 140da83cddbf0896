import time

import pytest

_results = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None or report.when != "call" and not (report.when == "setup" and report.failed):
        return
    number, title, limit = mark.args
    _results.append((number, title, limit, report.passed, call.duration))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, limit, passed, duration in sorted(_results):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(
            f"AC-{number:02d} {status}  {title}  ({duration:.2f} s, limit {limit:g} s)")


class Timer:
    def __init__(self, limit):
        self.limit = limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.limit, f"took {self.elapsed:.2f} s, limit {self.limit} s"


@pytest.fixture
def budget_timer(request):
    mark = request.node.get_closest_marker("acceptance")
    return Timer(mark.args[2])
