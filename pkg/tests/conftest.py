"""Shared fixtures plus the acceptance summary hook.

Acceptance tests record one line per criterion; the terminal summary
prints them all at the end of the run so a single glance shows which
criteria passed at their stated tolerances.
"""

from __future__ import annotations

import pytest

_CRITERIA: dict[str, tuple[bool, str]] = {}


def record_criterion(label: str, ok: bool, detail: str = "") -> None:
    _CRITERIA[label] = (ok, detail)


@pytest.fixture
def criterion():
    return record_criterion


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_CRITERIA):
        ok, detail = _CRITERIA[label]
        mark = "PASS" if ok else "FAIL"
        line = f"{mark}  {label}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
