"""Shared fixtures: acceptance verdict collection and summary reporting."""

from __future__ import annotations

import pytest

VERDICTS: list[str] = []


@pytest.fixture()
def record_verdict():
    """One pass/fail line per acceptance check, echoed in the run summary."""

    def _record(name: str, ok: bool, detail: str = "") -> None:
        status = "PASS" if ok else "FAIL"
        line = f"{status} {name}" + (f" [{detail}]" if detail else "")
        VERDICTS.append(line)
        print(line)
        assert ok, line

    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if VERDICTS:
        terminalreporter.write_sep("-", "acceptance verdicts")
        for line in VERDICTS:
            terminalreporter.write_line(line)
