import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fillin import _kernels, _pykernels
from fillin.graph import Graph

from conftest import random_graph

ck = pytest.importorskip("fillin._ckernels")


def _pairs(rng, n):
    g = random_graph(rng, n, rng.random())
    mask = rng.getrandbits(n) if n else 0
    return g, mask


@given(st.integers(0, 70), st.integers(0, 10**6))
@settings(max_examples=300, deadline=None)
def test_compiled_matches_python(n, seed):
    rng = random.Random(seed)
    g, mask = _pairs(rng, n)
    adj = g.adj
    for name in ("components", "neighborhood", "fill_count", "pmc_separators"):
        if name == "pmc_separators" and not mask:
            continue
        assert getattr(ck, name)(adj, mask) == getattr(_pykernels, name)(adj, mask), name
    assert ck.peo(adj) == _pykernels.peo(adj)
    assert ck.mcs_m(adj) == _pykernels.mcs_m(adj)
    assert ck.mcs_m(adj, mask) == _pykernels.mcs_m(adj, mask)


def test_boundary_sizes():
    for n in (63, 64, 65):
        g = Graph.cycle(n)
        assert ck.peo(g.adj) is None and _pykernels.peo(g.adj) is None
        assert ck.components(g.adj, g.full & ~1) == [g.full & ~1]
        assert ck.fill_count(g.adj, g.full) == n * (n - 1) // 2 - n


def test_backend_switch():
    code = "from fillin import _kernels; print(_kernels.BACKEND)"
    env = dict(os.environ, FILLIN_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    assert _kernels.BACKEND in ("cython", "python")


def test_pure_python_solver_agrees():
    script = (
        "import json, random, itertools\n"
        "from fillin.graph import Graph\n"
        "from fillin.dp import solve\n"
        "rng = random.Random(4)\n"
        "out = []\n"
        "for _ in range(60):\n"
        "    n = rng.randint(2, 10)\n"
        "    g = Graph.from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.35])\n"
        "    s = solve(g, 4)\n"
        "    out.append(None if s is None else sorted(s.fill))\n"
        "print(json.dumps(out))\n"
    )
    runs = []
    for flag in ("1", "0"):
        env = dict(os.environ, FILLIN_PURE_PYTHON=flag)
        res = subprocess.run([sys.executable, "-c", script], env=env, capture_output=True, text=True, check=True)
        runs.append(res.stdout)
    assert runs[0] == runs[1]
