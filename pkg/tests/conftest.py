import pytest

_ACCEPTANCE = {}


@pytest.fixture
def acceptance(request):
    """Record the outcome of one numbered acceptance criterion.

    The test marks its criterion with ``@pytest.mark.criterion(k, title)``;
    the result is taken from the test outcome and reported in the summary.
    """
    marker = request.node.get_closest_marker("criterion")
    number, title = marker.args
    notes = []
    _ACCEPTANCE[number] = [title, None, notes]
    return notes


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or marker.args[0] not in _ACCEPTANCE:
        return
    entry = _ACCEPTANCE[marker.args[0]]
    if report.when == "call" or report.failed:
        entry[1] = report.passed and entry[1] is not False


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, passed, notes = _ACCEPTANCE[number]
        status = "PASS" if passed else "FAIL"
        detail = f" ({'; '.join(notes)})" if notes else ""
        terminalreporter.write_line(f"[{status}] {number:2d}. {title}{detail}")
