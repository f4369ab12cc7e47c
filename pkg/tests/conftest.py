from __future__ import annotations

_CRITERIA: dict[str, tuple[str, bool]] = {}


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        _CRITERIA[report.nodeid] = (props["criterion"], report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed in sorted(_CRITERIA.values(), key=lambda v: int(v[0].split()[0])):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  criterion {label}")
