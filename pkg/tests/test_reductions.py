import itertools
import random

import pytest

from fillin.dp import FillSolution
from fillin.graph import Graph
from fillin.kernel import SandwichInstance
from fillin.oracles import oracle_chain, oracle_mfi, oracle_sandwich
from fillin.reductions import (
    BipartiteGraph,
    Coloring,
    chain_to_fillin,
    colored_to_sandwich,
    is_chain_graph,
    solve_chain,
    solve_colored,
    solve_sandwich,
)

from conftest import random_graph

TWO_K2 = BipartiteGraph((0, 1), (2, 3), frozenset({(0, 2), (1, 3)}))
K22 = BipartiteGraph((0, 1), (2, 3), frozenset({(0, 2), (0, 3), (1, 2), (1, 3)}))


def test_chain_graph_examples():
    assert is_chain_graph(BipartiteGraph((0,), (1, 2, 3), frozenset({(0, 1), (0, 2), (0, 3)})))
    assert not is_chain_graph(TWO_K2)
    assert is_chain_graph(K22)


def test_bipartite_validation():
    with pytest.raises(ValueError):
        BipartiteGraph((0, 1), (1, 2), frozenset())
    with pytest.raises(ValueError):
        BipartiteGraph((0, 1), (2,), frozenset({(0, 1)}))


def test_chain_to_fillin_examples():
    inst = chain_to_fillin(TWO_K2, 1)
    assert sorted(inst.graph.edges()) == [(0, 1), (0, 2), (1, 3), (2, 3)]
    assert oracle_mfi(inst.graph) == 1
    assert oracle_mfi(chain_to_fillin(K22, 0).graph) == 0


def test_solve_chain_examples():
    fill = solve_chain(TWO_K2, 1)
    assert len(fill) == 1 and fill <= {(0, 3), (1, 2)}
    assert solve_chain(K22, 0) == frozenset()
    assert solve_chain(TWO_K2, 0) is None


def test_oracle_chain_examples():
    assert oracle_chain(TWO_K2) == 1
    assert oracle_chain(K22) == 0
    assert oracle_chain(BipartiteGraph((0, 1), (2, 3), frozenset({(0, 2), (0, 3), (1, 2)}))) == 0


def test_colored_examples(c4):
    inst = colored_to_sandwich(c4, Coloring(((0, 2), (1, 3))), 3)
    assert inst.allowed == frozenset()
    assert solve_sandwich(inst) is None
    inst = colored_to_sandwich(c4, Coloring.from_colors([0, 1, 2, 3]), 1)
    assert inst.allowed == {(0, 2), (1, 3)}
    assert solve_sandwich(inst).size == 1
    chordal = Graph.path(4)
    assert solve_colored(chordal, Coloring.from_colors([0, 0, 0, 0]), 0).fill == frozenset()


def test_coloring_validation(c4):
    with pytest.raises(ValueError):
        colored_to_sandwich(c4, Coloring(((0, 1), (2,))), 1)
    with pytest.raises(ValueError):
        colored_to_sandwich(c4, Coloring(((0, 1, 2), (2, 3))), 1)


def test_sandwich_examples(c4):
    assert solve_sandwich(SandwichInstance(c4, {(0, 2), (1, 3)}, 1)).size == 1
    assert solve_sandwich(SandwichInstance(c4, {(1, 3)}, 1)) == FillSolution(frozenset({(1, 3)}))
    assert solve_sandwich(SandwichInstance(c4, frozenset(), 3)) is None


def test_sandwich_random_against_oracle():
    rng = random.Random(17)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        pairs = g.non_edges()
        rng.shuffle(pairs)
        allowed = frozenset(pairs[: rng.randint(0, 24)])
        k = rng.randint(0, 3)
        best = next((j for j in range(k + 1) if oracle_sandwich(SandwichInstance(g, allowed, j))), None)
        sol = solve_sandwich(SandwichInstance(g, allowed, k))
        assert (sol is None) == (best is None)
        if sol is not None:
            assert sol.size == best and sol.fill <= allowed


def test_colored_never_monochromatic():
    rng = random.Random(23)
    for _ in range(200):
        n = rng.randint(2, 8)
        g = random_graph(rng, n, rng.random())
        col = Coloring.from_colors([rng.randrange(3) for _ in range(n)])
        color = col.color_of(n)
        sol = solve_colored(g, col, rng.randint(0, 3))
        if sol is not None:
            assert all(color[u] != color[v] for u, v in sol.fill)


def test_chain_small_exhaustive():
    for n in range(2, 7):
        for size in range(1, n):
            left, right = tuple(range(size)), tuple(range(size, n))
            cross = list(itertools.product(left, right))
            if len(cross) > 9:
                continue
            for bits in range(1 << len(cross)):
                b = BipartiteGraph(left, right, frozenset(cross[i] for i in range(len(cross)) if bits >> i & 1))
                best = oracle_chain(b)
                for k in range(4):
                    fill = solve_chain(b, k)
                    assert (fill is not None) == (best <= k)
                    if fill is not None:
                        assert len(fill) == best
