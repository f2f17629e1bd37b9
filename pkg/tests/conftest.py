import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_acceptance: list[tuple[str, bool]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call":
        _acceptance.append((name, report.passed))
    elif report.when == "setup" and report.failed:
        _acceptance.append((name, False))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in sorted(_acceptance):
        terminalreporter.write_line(f"{name}: {'PASS' if ok else 'FAIL'}")
