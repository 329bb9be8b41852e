import functools

import pytest

from groupgraphs.groupspec import make_family

ACCEPTANCE_LINES = []


@functools.lru_cache(maxsize=None)
def group(spec):
    """Catalog groups are immutable, so tests share one instance per spec."""
    return make_family(spec)


@pytest.fixture
def G():
    return group


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
