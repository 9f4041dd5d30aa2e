"""Shared test configuration.

Registers a deterministic hypothesis profile and an acceptance-line recorder:
the acceptance tests each record one PASS/FAIL line, and all recorded lines
are printed in a dedicated block at the end of the pytest run.
"""
from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "deterministic",
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("deterministic")

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance():
    """Record one acceptance line; returns the verdict so callers can assert it."""

    def record(name: str, ok: bool, detail: str) -> bool:
        line = f"{'PASS' if ok else 'FAIL'} {name}: {detail}"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _ACCEPTANCE_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
