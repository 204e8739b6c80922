import pytest

_RESULTS: dict[str, list[bool]] = {}
_NOTES: list[str] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    label = marker.args[0]
    if report.when == "call" or (report.when == "setup" and report.failed):
        _RESULTS.setdefault(label, []).append(report.passed)


def record_note(text: str) -> None:
    _NOTES.append(text)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS and not _NOTES:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_RESULTS):
        status = "PASS" if all(_RESULTS[label]) else "FAIL"
        terminalreporter.write_line(f"{status}  {label}")
    for text in _NOTES:
        terminalreporter.write_line(f"NOTE  {text}")
