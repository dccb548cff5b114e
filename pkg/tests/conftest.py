import re

_lines: list[str] = []


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    for _, text in report.sections:
        _lines.extend(ln for ln in text.splitlines() if re.match(r"\[(PASS|FAIL)\] criterion", ln))


def pytest_terminal_summary(terminalreporter):
    if _lines:
        terminalreporter.section("acceptance criteria")
        for ln in sorted(_lines, key=lambda s: int(re.search(r"criterion (\d+)", s).group(1))):
            terminalreporter.write_line(ln)
