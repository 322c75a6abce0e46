from __future__ import annotations

import pytest

from graphclust.generators import gnp_connected
from graphclust.graph import Graph

CORPUS_SIZE = 300
CORPUS_PS = (0.2, 0.5, 0.8)

#: lines collected by the acceptance module, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def corpus_params(idx: int) -> tuple[int, float, int]:
    # 7 and 3 are coprime, so the corpus cycles through all 21 (n, p) cells
    return 6 + idx % 7, CORPUS_PS[idx % 3], 10_000 + idx


def build_corpus() -> list[Graph]:
    graphs = []
    for idx in range(CORPUS_SIZE):
        n, p, seed = corpus_params(idx)
        graphs.append(gnp_connected(n, p, seed, max_tries=100_000)[0])
    return graphs


@pytest.fixture(scope="session")
def corpus() -> list[Graph]:
    return build_corpus()


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
