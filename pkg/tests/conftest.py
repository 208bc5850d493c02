import pytest

_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    number = item.get_closest_marker("criterion")
    if number is None or report.when not in ("setup", "call"):
        return
    key = number.args[0]
    if report.when == "setup" and report.passed:
        return
    detail = dict(item.user_properties).get("detail", "")
    _criteria[key] = ("PASS" if report.passed else "FAIL", detail)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria):
        status, detail = _criteria[key]
        terminalreporter.write_line(f"criterion {key:>2}: {status}  {detail}")
