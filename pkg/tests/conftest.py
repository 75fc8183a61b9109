import time

import pytest

_SESSION_T0 = time.monotonic()

#: one line per acceptance criterion, re-echoed after the test summary so the
#: PASS/FAIL verdicts survive pytest's stdout capture
ACCEPTANCE_LINES: list[str] = []


def record(line: str) -> None:
    ACCEPTANCE_LINES.append(line)


@pytest.hookimpl(trylast=True)
def pytest_terminal_summary(terminalreporter, exitstatus, config):
    elapsed = time.monotonic() - _SESSION_T0
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
        terminalreporter.write_line(
            f"total suite wall time {elapsed:.1f}s (budget 60s)"
        )
