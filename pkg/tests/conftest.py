import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_results: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    failed = report.failed
    if report.when == "call" or failed:
        prev = _results.get(number)
        status = "FAIL" if failed or (prev and prev[1] == "FAIL") else "PASS"
        elapsed = (prev[2] if prev else 0.0) + (report.duration if report.when == "call" else 0.0)
        _results[number] = (title, status, elapsed)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        title, status, elapsed = _results[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}  ({elapsed:.2f}s)")
