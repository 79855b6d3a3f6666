from functools import lru_cache

import pytest

from bruhat_operads.bruhat import enumerate_bruhat

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def elements(n, d):
    return tuple(enumerate_bruhat(n, d))


@pytest.fixture
def B():
    """``B(n, d)`` -> cached tuple of all elements."""
    return elements


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
