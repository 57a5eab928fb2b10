"""Shared test plumbing.

The helpers here recheck package results by direct pointwise enumeration
over a finite window; they never call back into the code path under test.
"""

import random

import pytest


def pytest_configure(config):
    config._acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return random.Random(20260819)


def brute_moved(f, bound):
    """Moved points of f inside [0, bound), by direct application."""
    return {x for x in range(bound) if f.apply(x) != x}


def assert_pointwise_equal(f, g, bound=200):
    for x in range(bound):
        assert f.apply(x) == g.apply(x), (x, f.apply(x), g.apply(x))
