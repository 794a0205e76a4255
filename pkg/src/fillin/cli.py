"""Command-line front end.

Exit codes: 0 YES or success, 1 NO, 2 usage or parse error, 3 internal
verification failure.  Reports are JSON objects with the fields
``answer``, ``k``, ``fill`` and ``stats`` (one line, newline-terminated),
or a short text rendering with ``--emit text``.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from itertools import combinations

from . import _kernels
from .branching import FillInInstance, find_obscured_path
from .chordal import find_chordless_cycle, minimal_triangulation
from .dp import VerificationError, solve
from .graph import Graph
from .io import Document, ParseError, parse_colors, parse_document, parse_left, parse_pairs
from .kernel import KernelStatus, SandwichInstance, kernelize
from .oracles import oracle_mfi
from .pmc import enumerate_vital_pmcs
from .reductions import BipartiteGraph, Coloring, solve_chain, solve_colored, solve_sandwich

EXIT_YES, EXIT_NO, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _labels(doc: Document, pairs) -> list:
    return [[doc.label(u), doc.label(v)] for u, v in sorted(pairs)]


def report(answer: bool, k, fill, stats) -> dict:
    return {"answer": "YES" if answer else "NO", "k": k, "fill": fill, "stats": stats}


def _need_k(args) -> int:
    if args.k is None:
        raise UsageError(f"{args.command} needs --k")
    return args.k


def cmd_solve(doc, args, stats):
    k = _need_k(args)
    sol = solve(doc.graph, k, stats)
    return report(sol is not None, k, _labels(doc, sol.fill) if sol else [], stats)


def cmd_sandwich(doc, args, stats):
    k = _need_k(args)
    inst = SandwichInstance(doc.graph, parse_pairs(doc), k)
    sol = solve_sandwich(inst, stats)
    return report(sol is not None, k, _labels(doc, sol.fill) if sol else [], stats)


def cmd_colored(doc, args, stats):
    k = _need_k(args)
    col = Coloring.from_colors(parse_colors(doc))
    sol = solve_colored(doc.graph, col, k, stats)
    return report(sol is not None, k, _labels(doc, sol.fill) if sol else [], stats)


def cmd_chain(doc, args, stats):
    k = _need_k(args)
    g = doc.graph
    left = parse_left(doc)
    right = tuple(v for v in range(g.n) if v not in set(left))
    try:
        b = BipartiteGraph(left, right, frozenset(g.edges()))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fill = solve_chain(b, k, stats)
    return report(fill is not None, k, _labels(doc, fill) if fill is not None else [], stats)


def cmd_kernelize(doc, args, stats):
    k = _need_k(args)
    res = kernelize(SandwichInstance(doc.graph, frozenset(doc.graph.non_edges()), k), stats)
    stats["status"] = res.status.value
    if res.status is KernelStatus.REDUCED:
        stats["kernel_labels"] = [doc.label(v) for v in res.vertex_map]
        stats["kernel_budget"] = res.instance.k
    return report(res.status is not KernelStatus.NO, k, _labels(doc, res.forced_fill), stats)


def cmd_pmcs(doc, args, stats):
    k = _need_k(args)
    g = doc.graph
    cat = enumerate_vital_pmcs(g, k)
    stats["non_reducible"] = find_obscured_path(FillInInstance(g, k)) is None
    stats["pmcs"] = [[doc.label(v) for v in p.omega] for p in cat]
    stats["catalog_size"] = len(cat)
    return report(True, k, [], stats)


def cmd_check_chordal(doc, args, stats):
    cyc = find_chordless_cycle(doc.graph)
    if cyc is not None:
        stats["chordless_cycle"] = [doc.label(v) for v in cyc]
    else:
        stats["elimination_order"] = [doc.label(v) for v in _kernels.peo(doc.graph.adj)]
    return report(cyc is None, args.k, [], stats)


def cmd_triangulate(doc, args, stats):
    tri = minimal_triangulation(doc.graph)
    stats["elimination_order"] = [doc.label(v) for v in tri.ordering]
    return report(True, args.k, _labels(doc, tri.fill), stats)


def cmd_oracle(doc, args, stats):
    limit = args.k if args.k is not None else None
    value = oracle_mfi(doc.graph, limit)
    stats["oracle_mfi"] = value if limit is None or value <= limit else f">{limit}"
    return report(limit is None or value <= limit, args.k, [], stats)


def _selftest(count: int, seed: int, out) -> int:
    rng = random.Random(seed)
    bad = 0
    for i in range(count):
        n = rng.randint(1, 8)
        p = rng.random()
        g = Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])
        want = oracle_mfi(g, 5)
        for k in range(5):
            sol = solve(g, k)
            ok = (sol is not None) == (want <= k) and (sol is None or sol.size == want)
            if not ok:
                bad += 1
                print(f"mismatch on {g!r} k={k}: oracle {want}, solver {sol}", file=out)
    print(f"selftest: {count} graphs, {bad} mismatches, backend {_kernels.BACKEND}", file=out)
    return EXIT_YES if bad == 0 else EXIT_VERIFY


COMMANDS = {
    "solve": cmd_solve,
    "sandwich": cmd_sandwich,
    "chain": cmd_chain,
    "colored": cmd_colored,
    "kernelize": cmd_kernelize,
    "pmcs": cmd_pmcs,
    "check-chordal": cmd_check_chordal,
    "triangulate": cmd_triangulate,
    "oracle": cmd_oracle,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fillin", description="Exact minimum fill-in and related problems.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--k", type=int, help="edge budget")
        p.add_argument("--emit", choices=("json", "text"), default="json")
        p.add_argument("--input", default="-", help="graph file, '-' for stdin")
    p = sub.add_parser("selftest", help="compare the solver with the brute-force oracle on random graphs")
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    return parser


def emit(rep: dict, mode: str, out) -> None:
    if mode == "json":
        out.write(json.dumps(rep, ensure_ascii=False) + "\n")
        return
    out.write(f"answer: {rep['answer']}\n")
    if rep["k"] is not None:
        out.write(f"k: {rep['k']}\n")
    out.write("fill: " + " ".join(f"{u}-{v}" for u, v in rep["fill"]) + "\n")
    for key, val in rep["stats"].items():
        out.write(f"{key}: {val}\n")


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_YES
    if args.command == "selftest":
        return _selftest(args.count, args.seed, stdout)
    if args.k is not None and args.k < 0:
        print("fillin: --k must be non-negative", file=stderr)
        return EXIT_USAGE
    try:
        if args.input == "-":
            text = stdin.read()
        else:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        doc = parse_document(text)
        stats = {"backend": _kernels.BACKEND}
        rep = COMMANDS[args.command](doc, args, stats)
    except (ParseError, UsageError, OSError) as exc:
        print(f"fillin: {exc}", file=stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"fillin: verification failed: {exc}", file=stderr)
        return EXIT_VERIFY
    except ValueError as exc:
        # invalid instances rejected by the library (bad pairs, oracle guards)
        print(f"fillin: {exc}", file=stderr)
        return EXIT_USAGE
    emit(rep, args.emit, stdout)
    return EXIT_YES if rep["answer"] == "YES" else EXIT_NO


def main() -> None:
    sys.exit(run())
