import math

import pytest

from ctaffect.media import ClassicalMedium, CoherentMedium
from ctaffect.task_algebra import A_VAR, X_VAR


@pytest.fixture
def qubit():
    return CoherentMedium.qubit()


@pytest.fixture
def classical():
    return ClassicalMedium.product(X_VAR, A_VAR)


@pytest.fixture
def bit():
    return ClassicalMedium.bit()


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: longer-running checks")


_SESSION_START = {}


def pytest_sessionstart(session):
    import time

    _SESSION_START["t"] = time.perf_counter()


def pytest_terminal_summary(terminalreporter):
    import sys
    import time

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
    elapsed = time.perf_counter() - _SESSION_START.get("t", time.perf_counter())
    ok = elapsed < 60.0
    terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion 7 (suite runtime): {elapsed:.1f} s < 60 s")
