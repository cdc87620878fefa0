import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from chromideal.graph import Graph  # noqa: E402

# 6 vertices, 8 edges; its independence structure is the worked example
# with maximal independent sets 13, 14, 246, 35, 36.
SIX_VERTEX_EDGES = [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (2, 5), (1, 5)]
# three triangles 123, 345, 156 glued in a cycle
THREE_TRIANGLES_EDGES = [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5), (1, 5), (1, 6), (5, 6)]
THREE_TRIANGLES_COVER = [[1, 2, 3], [3, 4, 5], [1, 5, 6]]
# two triangles sharing vertex 3
BOWTIE_EDGES = [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]
BOWTIE_COVER = [[1, 2, 3], [3, 4, 5]]


@pytest.fixture
def six_vertex():
    return Graph(6, SIX_VERTEX_EDGES)


@pytest.fixture
def three_triangles():
    return Graph(6, THREE_TRIANGLES_EDGES)


@pytest.fixture
def bowtie():
    return Graph(5, BOWTIE_EDGES)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
