from __future__ import annotations

import pytest

from domenum.graph import Graph

# lines collected by the acceptance suite, echoed at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def p4() -> Graph:
    return Graph("abcd", [("a", "b"), ("b", "c"), ("c", "d")])


@pytest.fixture
def c4() -> Graph:
    return Graph(["v1", "v2", "v3", "v4"], [("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v1")])


@pytest.fixture
def c4_pendant() -> Graph:
    return Graph(["v1", "v2", "v3", "v4", "p"],
                 [("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v1"), ("v1", "p")])


@pytest.fixture
def c6() -> Graph:
    names = [f"v{i}" for i in range(1, 7)]
    return Graph(names, [(names[i], names[(i + 1) % 6]) for i in range(6)])
