import itertools
import random

import pytest

from fillin import _kernels
from fillin.graph import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(_kernels.components(g.adj, g.full)) == 1


def labeled_graphs(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


def random_connected(rng: random.Random, lo: int, hi: int, densities=(0.15, 0.25, 0.4, 0.6, 0.8)) -> Graph:
    while True:
        g = random_graph(rng, rng.randint(lo, hi), rng.choice(densities))
        if is_connected(g):
            return g


def fill_of(g: Graph, omega) -> int:
    return sum(1 for a, b in itertools.combinations(omega, 2) if not g.has_edge(a, b))


@pytest.fixture
def c4():
    return Graph.cycle(4)


@pytest.fixture
def k4():
    return Graph.complete(4)


@pytest.fixture
def p3():
    return Graph.path(3)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])
