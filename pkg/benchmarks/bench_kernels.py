"""Compare the compiled kernels with the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--sizes 16 32 60] [--repeat 5]

The first table times each kernel directly on random graphs.  The second
times end-to-end ``solve`` in two fresh interpreters, one forced onto the
pure-Python backend with FILLIN_PURE_PYTHON=1.
"""
import argparse
import os
import random
import subprocess
import sys
import timeit
from itertools import combinations

from fillin import _pykernels
from fillin.graph import Graph

try:
    from fillin import _ckernels
except ImportError:
    _ckernels = None

SOLVE_SCRIPT = """
import random, time
from itertools import combinations
from fillin.graph import Graph
from fillin.dp import solve
rng = random.Random(1)
graphs = []
while len(graphs) < {count}:
    n = rng.randint(8, 14)
    g = Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < 0.3])
    graphs.append(g)
t0 = time.perf_counter()
for g in graphs:
    solve(g, 6)
print(time.perf_counter() - t0)
"""


def workload(n: int, seed: int):
    rng = random.Random(seed)
    g = Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < 0.2])
    masks = [rng.getrandbits(n) | 1 for _ in range(50)]
    return g.adj, masks


def kernel_calls(mod, adj, masks):
    return {
        "components": lambda: [mod.components(adj, m) for m in masks],
        "fill_count": lambda: [mod.fill_count(adj, m) for m in masks],
        "pmc_separators": lambda: [mod.pmc_separators(adj, m) for m in masks],
        "peo": lambda: mod.peo(adj),
        "mcs_m": lambda: mod.mcs_m(adj),
    }


def time_call(fn, repeat: int) -> float:
    number = 20
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[16, 32, 60])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--solve-count", type=int, default=200)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled extension not built; only the Python backend is available")
        return 1

    print(f"{'kernel':<16}{'n':>4}{'python us':>12}{'cython us':>12}{'speedup':>9}")
    for n in args.sizes:
        adj, masks = workload(n, n)
        py = kernel_calls(_pykernels, adj, masks)
        cy = kernel_calls(_ckernels, adj, masks)
        for name in py:
            assert py[name]() == cy[name](), name
            tp = time_call(py[name], args.repeat) * 1e6
            tc = time_call(cy[name], args.repeat) * 1e6
            print(f"{name:<16}{n:>4}{tp:>12.1f}{tc:>12.1f}{tp / tc:>8.1f}x")

    print()
    script = SOLVE_SCRIPT.format(count=args.solve_count)
    times = {}
    for label, flag in (("python", "1"), ("cython", "0")):
        env = dict(os.environ, FILLIN_PURE_PYTHON=flag)
        out = subprocess.run([sys.executable, "-c", script], env=env, capture_output=True, text=True, check=True)
        times[label] = float(out.stdout)
    print(f"solve on {args.solve_count} random graphs (n 8-14, k=6): "
          f"python {times['python']:.2f}s, cython {times['cython']:.2f}s, "
          f"speedup {times['python'] / times['cython']:.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
