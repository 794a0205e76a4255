"""Dynamic programming over vital PMCs and the end-to-end fill-in pipeline.

A block ``(S, C)`` is a minimal separator with one of its full components.
Its value is the cheapest way to triangulate ``G[S ∪ C]`` with ``S`` already
completed: pick a PMC ``S ⊊ Ω ⊆ S ∪ C``, pay for the non-edges of ``Ω`` not
inside ``S``, and recurse into the components of ``G[S ∪ C] - Ω``.  Values
saturate at ``k + 1``.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import _kernels
from .branching import FillInInstance, reduce_to_nonreducible
from .graph import EdgePair, Graph, VertexSet, edge_pair, from_mask, pairs_in, to_mask
from .kernel import KernelStatus, SandwichInstance, kernelize
from .pmc import PmcCatalog, vital_pmc_masks


class VerificationError(RuntimeError):
    """A produced solution failed its final check (a defect, never a NO)."""


@dataclass(frozen=True)
class Block:
    s: VertexSet
    c: VertexSet


@dataclass
class DpTable:
    """Memo from ``(s_mask, c_mask)`` to ``(value, chosen omega mask)``.

    A value of ``k + 1`` means "more than k" and carries no choice.
    """

    k: int
    memo: dict = field(default_factory=dict)
    root: tuple | None = None


@dataclass(frozen=True)
class FillSolution:
    fill: frozenset

    @property
    def size(self) -> int:
        return len(self.fill)


class _Solver:
    def __init__(self, g: Graph, omegas, k: int, table: DpTable):
        self.adj = g.adj
        self.full = g.full
        self.cap = k + 1
        self.table = table
        # tie-break: smallest canonical omega wins among equal values
        self.pmcs = sorted(((from_mask(m), m, _kernels.fill_count(g.adj, m)) for m in omegas))

    def block(self, s: int, c: int) -> int:
        hit = self.table.memo.get((s, c))
        if hit is not None:
            return hit[0]
        adj = self.adj
        cap = self.cap
        region = s | c
        s_fill = _kernels.fill_count(adj, s)
        best = cap
        choice = None
        for _, om, fill in self.pmcs:
            if om & ~region or om & s != s or om == s:
                continue
            val = fill - s_fill
            if val >= best:
                continue
            for comp in _kernels.components(adj, region & ~om):
                val += self.block(_kernels.neighborhood(adj, comp), comp)
                if val >= best:
                    break
            if val < best:
                best = val
                choice = om
        self.table.memo[(s, c)] = (best, choice)
        return best

    def root(self) -> int:
        adj = self.adj
        best = self.cap
        choice = None
        for _, om, fill in self.pmcs:
            val = fill
            if val >= best:
                continue
            for comp in _kernels.components(adj, self.full & ~om):
                val += self.block(_kernels.neighborhood(adj, comp), comp)
                if val >= best:
                    break
            if val < best:
                best = val
                choice = om
        self.table.root = (best, choice)
        return best


def _check_catalog(g: Graph, catalog: PmcCatalog, k: int) -> None:
    if catalog.fingerprint != g.fingerprint():
        raise ValueError("catalog was built from a different graph")
    if catalog.budget is not None and catalog.budget < k:
        raise ValueError(f"catalog budget {catalog.budget} is below k={k}")


def mfi_block(g: Graph, b: Block, catalog: PmcCatalog, table: DpTable, k: int) -> int:
    _check_catalog(g, catalog, k)
    if not b.c:
        raise ValueError("block component must be nonempty")
    solver = _Solver(g, (p.mask for p in catalog.entries.values()), k, table)
    return solver.block(to_mask(b.s), to_mask(b.c))


def mfi_root(g: Graph, catalog: PmcCatalog, k: int, table: DpTable | None = None) -> int:
    """Minimum fill of ``g`` if it is at most ``k``, else ``k + 1``."""
    _check_catalog(g, catalog, k)
    table = DpTable(k) if table is None else table
    solver = _Solver(g, (p.mask for p in catalog.entries.values()), k, table)
    return solver.root()


def _trace(adj, full: int, table: DpTable) -> list[EdgePair]:
    value, om = table.root
    parts = [pairs_in(om, adj)]
    stack = [(comp, om) for comp in _kernels.components(adj, full & ~om)]
    while stack:
        comp, _ = stack.pop()
        s = _kernels.neighborhood(adj, comp)
        _, choice = table.memo[(s, comp)]
        parts.append([(a, b) for a, b in pairs_in(choice, adj) if not (s >> a & 1 and s >> b & 1)])
        for sub in _kernels.components(adj, (s | comp) & ~choice):
            stack.append((sub, choice))
    fill = []
    for part in parts:
        fill.extend(part)
    if len(set(fill)) != len(fill):
        raise VerificationError("block fills overlap")
    if len(fill) != value:
        raise VerificationError(f"traced {len(fill)} fill edges for DP value {value}")
    return fill


def reconstruct(g: Graph, catalog: PmcCatalog, table: DpTable, k: int) -> FillSolution | None:
    if table.root is None:
        mfi_root(g, catalog, k, table)
    if table.root[0] > k:
        return None
    fill = frozenset(_trace(g.adj, g.full, table))
    if _kernels.peo(g.with_edges(fill).adj) is None:
        raise VerificationError("reconstructed graph is not chordal")
    return FillSolution(fill)


def _component_minimum(g: Graph, budget: int, allowed: frozenset | None, stats: dict) -> frozenset | None:
    """Minimum fill (within ``allowed``) of a connected graph if at most
    ``budget``; leaves are scanned by forced-edge count and pruned against
    the best total found so far."""
    admissible = None if allowed is None else allowed.issuperset
    leaves = reduce_to_nonreducible(FillInInstance(g, budget), admissible, stats)
    leaves.sort(key=lambda leaf: len(leaf.forced))
    best = None
    best_total = budget + 1
    for leaf in leaves:
        forced = len(leaf.forced)
        if forced >= best_total:
            break
        cap = min(leaf.k, best_total - forced - 1)
        adj = leaf.graph.adj
        if _kernels.peo(adj) is not None:
            best, best_total = leaf.forced, forced
            continue
        masks = vital_pmc_masks(adj, leaf.k)
        stats["catalog_total"] = stats.get("catalog_total", 0) + len(masks)
        omegas = [m for m in masks if _kernels.fill_count(adj, m) <= cap]
        if allowed is not None:
            ladj = _with_pairs(adj, allowed)
            omegas = [m for m in omegas if _kernels.fill_count(ladj, m) == 0]
        table = DpTable(cap)
        solver = _Solver(leaf.graph, omegas, cap, table)
        value = solver.root()
        if value <= cap:
            fill = _trace(adj, leaf.graph.full, table)
            best = leaf.forced | frozenset(fill)
            best_total = forced + value
    return best


def _with_pairs(adj, pairs) -> list[int]:
    out = list(adj)
    for u, v in pairs:
        out[u] |= 1 << v
        out[v] |= 1 << u
    return out


def _solve_sandwich_core(inst: SandwichInstance, stats: dict, restrict: bool) -> frozenset | None:
    t0 = time.perf_counter()
    try:
        return _pipeline(inst, stats, restrict)
    finally:
        stats["elapsed_ms"] = round((time.perf_counter() - t0) * 1000, 3)


def _pipeline(inst: SandwichInstance, stats: dict, restrict: bool) -> frozenset | None:
    result = kernelize(inst, stats)
    stats["kernel_status"] = result.status.value
    if result.status is KernelStatus.NO:
        return None
    if result.status is KernelStatus.TRIVIAL_YES:
        return result.forced_fill
    kinst = result.instance
    kg = kinst.graph
    budget = kinst.k
    fill = set()
    for comp in _kernels.components(kg.adj, kg.full):
        verts = from_mask(comp)
        sub = kg.induced(verts)
        index = {v: i for i, v in enumerate(verts)}
        allowed = None
        if restrict:
            allowed = frozenset(
                (index[u], index[v]) for u, v in kinst.allowed if u in index and v in index
            )
        part = _component_minimum(sub, budget, allowed, stats)
        if part is None:
            return None
        budget -= len(part)
        fill.update(edge_pair(verts[u], verts[v]) for u, v in part)
    vm = result.vertex_map
    return result.forced_fill | frozenset(edge_pair(vm[u], vm[v]) for u, v in fill)


def _verify(g: Graph, fill, k: int, allowed=None) -> None:
    for u, v in fill:
        if g.has_edge(u, v):
            raise VerificationError(f"fill edge {u}-{v} already in the graph")
        if allowed is not None and (u, v) not in allowed:
            raise VerificationError(f"fill edge {u}-{v} is not allowed")
    if len(fill) > k:
        raise VerificationError(f"fill of size {len(fill)} exceeds budget {k}")
    if _kernels.peo(g.with_edges(fill).adj) is None:
        raise VerificationError("result is not chordal")


def solve(g: Graph, k: int, stats: dict | None = None) -> FillSolution | None:
    """Minimum fill-in of ``g`` when it has at most ``k`` edges, else ``None``.

    Kernelize, branch to non-reducible instances, enumerate vital PMCs of
    each leaf and run the DP; the returned fill is re-verified.
    """
    if k < 0:
        raise ValueError("budget must be non-negative")
    stats = {} if stats is None else stats
    inst = SandwichInstance(g, frozenset(g.non_edges()), k)
    fill = _solve_sandwich_core(inst, stats, restrict=False)
    if fill is None:
        return None
    _verify(g, fill, k)
    return FillSolution(frozenset(fill))


def solve_sandwich_instance(inst: SandwichInstance, stats: dict | None = None) -> FillSolution | None:
    stats = {} if stats is None else stats
    fill = _solve_sandwich_core(inst, stats, restrict=True)
    if fill is None:
        return None
    _verify(inst.graph, fill, inst.k, inst.allowed)
    return FillSolution(frozenset(fill))
