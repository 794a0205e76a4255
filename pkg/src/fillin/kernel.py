"""Polynomial kernel for chordal sandwich instances.

An instance is ``(graph, allowed, k)``: add at most ``k`` edges taken from
``allowed`` to make ``graph`` chordal.  Vertices on short chordless
structures are collected into a core ``A`` (at most ``4k`` of them, or the
answer is NO), pairs of the core with many private witnesses are forced as
fill, and everything outside the core is dropped.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from . import _kernels
from ._kernels import iter_bits
from .chordal import chordless_cycle_mask
from .graph import EdgePair, Graph, VertexSet, edge_pair, from_mask, to_mask


class KernelStatus(str, enum.Enum):
    REDUCED = "REDUCED"
    NO = "NO"
    TRIVIAL_YES = "TRIVIAL_YES"


@dataclass(frozen=True)
class SandwichInstance:
    graph: Graph
    allowed: frozenset
    k: int

    def __post_init__(self):
        allowed = frozenset(edge_pair(u, v) for u, v in self.allowed)
        for u, v in allowed:
            if not (0 <= u < self.graph.n and 0 <= v < self.graph.n):
                raise ValueError(f"allowed pair {u}-{v} out of range")
            if self.graph.has_edge(u, v):
                raise ValueError(f"allowed pair {u}-{v} is already an edge")
        if self.k < 0:
            raise ValueError("budget must be non-negative")
        object.__setattr__(self, "allowed", allowed)


@dataclass(frozen=True)
class KernelResult:
    status: KernelStatus
    instance: SandwichInstance | None = None
    vertex_map: tuple = ()
    forced_fill: frozenset = field(default_factory=frozenset)


def _a_xy_mask(adj, x: int, y: int, within: int) -> int:
    """Vertices ``w`` in ``within`` adjacent to both ``x`` and ``y`` such
    that ``x`` and ``y`` stay connected once ``N[w]`` is removed."""
    full = (1 << len(adj)) - 1
    out = 0
    for w in iter_bits(adj[x] & adj[y] & within):
        keep = (full & ~adj[w] & ~(1 << w)) | (1 << x) | (1 << y)
        frontier = 1 << x
        reach = frontier
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & keep & ~reach
            reach |= frontier
            if reach >> y & 1:
                out |= 1 << w
                break
    return out


def a_xy(inst: SandwichInstance, x: int, y: int) -> VertexSet:
    adj = inst.graph.adj
    if adj[x] >> y & 1 or x == y:
        raise ValueError(f"{x} and {y} must be distinct non-adjacent vertices")
    return from_mask(_a_xy_mask(adj, x, y, inst.graph.full))


def no_cycle_vertex_applies(inst: SandwichInstance, u: int) -> bool:
    """True when every component of ``G - N[u]`` has a clique neighbourhood."""
    adj = inst.graph.adj
    rest = inst.graph.full & ~adj[u] & ~(1 << u)
    for comp in _kernels.components(adj, rest):
        if _kernels.fill_count(adj, _kernels.neighborhood(adj, comp)):
            return False
    return True


def _p2_path(adj, a_mask: int, b_mask: int) -> int:
    """Mask of a chordless path of >= 2 vertices inside B that lies on a
    chordless cycle of G, or 0 when there is none.

    The path starts at ``u`` in B whose cycle neighbour ``x`` is in A; the
    rest of the cycle is a shortest path from ``N(u) ∩ B - N[x]`` to
    ``N(x) - N[u]`` avoiding ``N[u] ∪ N[x]`` internally.
    """
    for u in iter_bits(b_mask):
        for x in iter_bits(adj[u] & a_mask):
            nu = adj[u] | 1 << u
            nx = adj[x] | 1 << x
            starts = adj[u] & b_mask & ~nx
            goals = adj[x] & ~nu
            if not starts or not goals:
                continue
            inner = ~(nu | nx) & ((1 << len(adj)) - 1)
            parent = {}
            frontier = []
            for s in iter_bits(starts):
                parent[s] = None
                frontier.append(s)
            end = None
            while frontier and end is None:
                nxt = []
                for p in frontier:
                    hit = adj[p] & goals
                    if hit:
                        end = p
                        break
                    for q in iter_bits(adj[p] & inner):
                        if q not in parent:
                            parent[q] = p
                            nxt.append(q)
                frontier = nxt
            if end is None:
                continue
            walk = [end]
            while parent[walk[-1]] is not None:
                walk.append(parent[walk[-1]])
            walk.reverse()
            goal = adj[end] & goals
            goal &= -goal
            walk.append(goal.bit_length() - 1)
            # u followed by the maximal run of B vertices along the cycle
            run = 1 << u
            for p in walk:
                if not b_mask >> p & 1:
                    break
                run |= 1 << p
            return run
    return 0


def kernelize(inst: SandwichInstance, stats: dict | None = None) -> KernelResult:
    g = inst.graph
    adj = list(g.adj)
    allowed = set(inst.allowed)
    k = inst.k
    limit = 4 * inst.k
    core = 0
    outside = g.full

    while True:
        if core.bit_count() > limit:
            return KernelResult(KernelStatus.NO)
        cyc = chordless_cycle_mask(adj, outside)
        if cyc is None:
            break
        moved = to_mask(cyc)
        core |= moved
        outside &= ~moved

    while True:
        if core.bit_count() > limit:
            return KernelResult(KernelStatus.NO)
        moved = _p2_path(adj, core, outside)
        if not moved:
            break
        core |= moved
        outside &= ~moved

    forced = []
    base = core
    for x in iter_bits(base):
        for y in iter_bits(base & ~adj[x] & ~((2 << x) - 1)):
            if adj[x] >> y & 1:
                continue
            witnesses = _a_xy_mask(adj, x, y, outside)
            if witnesses.bit_count() <= 2 * k:
                core |= witnesses
                outside &= ~witnesses
            elif (x, y) not in allowed or k == 0:
                return KernelResult(KernelStatus.NO, forced_fill=frozenset(forced))
            else:
                allowed.discard((x, y))
                forced.append((x, y))
                adj[x] |= 1 << y
                adj[y] |= 1 << x
                k -= 1

    if stats is not None:
        stats["kernel_vertices"] = core.bit_count()
        stats["kernel_forced"] = len(forced)
    if not core:
        empty = SandwichInstance(Graph(0, []), frozenset(), k)
        return KernelResult(KernelStatus.TRIVIAL_YES, empty, (), frozenset(forced))
    keep = from_mask(core)
    index = {v: i for i, v in enumerate(keep)}
    kadj = [to_mask(index[u] for u in iter_bits(adj[v] & core)) for v in keep]
    labels = None if g.labels is None else [g.labels[v] for v in keep]
    kgraph = Graph(len(keep), kadj, labels)
    kallowed = frozenset((index[u], index[v]) for u, v in allowed if u in index and v in index)
    return KernelResult(
        KernelStatus.REDUCED,
        SandwichInstance(kgraph, kallowed, k),
        keep,
        frozenset(forced),
    )


def fillin_kernel(g: Graph, k: int, stats: dict | None = None) -> KernelResult:
    """Kernel for plain minimum fill-in: every non-edge is allowed."""
    return kernelize(SandwichInstance(g, frozenset(g.non_edges()), k), stats)


def lift(result: KernelResult, fill) -> frozenset[EdgePair]:
    """Map a fill of the reduced instance back to original ids and add the
    forced edges."""
    vm = result.vertex_map
    return result.forced_fill | frozenset(edge_pair(vm[u], vm[v]) for u, v in fill)
