"""Shared test infrastructure.

The acceptance module registers one PASS/FAIL line per criterion in
``ACCEPTANCE_LINES``; they are echoed in a terminal section at the end of
the run so they survive pytest's output capture.  The acceptance tests are
also moved to the end of the collection so the suite-budget criterion sees
(nearly) the whole run and the unit tests fail first on real regressions.
"""

from __future__ import annotations

import time

_SESSION_START = time.perf_counter()

ACCEPTANCE_LINES: list[str] = []


def session_elapsed() -> float:
    return time.perf_counter() - _SESSION_START


def pytest_collection_modifyitems(config, items) -> None:
    items.sort(key=lambda item: item.fspath.basename == "test_acceptance.py")


def pytest_terminal_summary(terminalreporter) -> None:
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
    terminalreporter.write_line(
        f"suite wall time so far: {session_elapsed():.1f}s"
    )
