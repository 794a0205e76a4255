"""Branching on obscured paths until every instance is non-reducible.

For non-adjacent ``u, v`` with common neighbourhood ``X``, a chordless
``u``-``v`` path whose internal vertices each miss at least
``t = ceil(sqrt(k))`` vertices of ``X`` forces any solution to either add
``uv`` or make some internal vertex see all of ``X``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import _kernels
from ._kernels import iter_bits
from .graph import Graph, VertexSet, from_mask
from .pmc import ceil_sqrt

Admissible = Callable[[list], bool]


@dataclass(frozen=True)
class FillInInstance:
    graph: Graph
    k: int
    forced: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("budget must be non-negative")


@dataclass(frozen=True)
class ObscuredWitness:
    u: int
    v: int
    path: tuple
    x: VertexSet

    @property
    def internal(self) -> tuple:
        return self.path[1:-1]


def _bfs_path(adj, src: int, dst: int, allowed: int) -> list[int] | None:
    parent = {src: None}
    frontier = [src]
    while frontier:
        nxt = []
        for a in frontier:
            for b in iter_bits(adj[a] & (allowed | 1 << dst)):
                if b in parent:
                    continue
                parent[b] = a
                if b == dst:
                    path = [b]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    return path[::-1]
                nxt.append(b)
        frontier = nxt
    return None


def obscured_mask(adj, k: int):
    """First ``(u, v, path, x_mask)`` in lexicographic pair order, or None."""
    n = len(adj)
    t = ceil_sqrt(k)
    for u in range(n):
        for v in iter_bits(~adj[u] & ((1 << n) - 1) & ~((2 << u) - 1)):
            x = adj[u] & adj[v]
            w = 0
            for c in range(n):
                if c != u and c != v and (x & ~adj[c] & ~(1 << c)).bit_count() >= t:
                    w |= 1 << c
            if not (adj[u] & w) or not (adj[v] & w):
                continue
            path = _bfs_path(adj, u, v, w)
            if path is not None:
                return u, v, path, x
    return None


def find_obscured_path(inst: FillInInstance) -> ObscuredWitness | None:
    hit = obscured_mask(inst.graph.adj, inst.k)
    if hit is None:
        return None
    u, v, path, x = hit
    return ObscuredWitness(u, v, tuple(path), from_mask(x))


def apply_branch(inst: FillInInstance, w: ObscuredWitness, admissible: Admissible | None = None) -> list[FillInInstance]:
    """Children of the branching rule; unaffordable or inadmissible children
    are dropped at generation time."""
    g = inst.graph
    children = []
    if inst.k >= 1:
        added = [(w.u, w.v)]
        if admissible is None or admissible(added):
            children.append(FillInInstance(g.with_edges(added), inst.k - 1, inst.forced | frozenset(added)))
    xmask = 0
    for x in w.x:
        xmask |= 1 << x
    for wi in w.internal:
        missing = xmask & ~g.adj[wi] & ~(1 << wi)
        if not missing:
            # only possible when t = 0; the child would equal the parent
            continue
        added = [(min(wi, x), max(wi, x)) for x in iter_bits(missing)]
        if len(added) > inst.k:
            continue
        if admissible is not None and not admissible(added):
            continue
        children.append(FillInInstance(g.with_edges(added), inst.k - len(added), inst.forced | frozenset(added)))
    return children


def _is_chordal(g: Graph) -> bool:
    return _kernels.peo(g.adj) is not None


def reduce_to_nonreducible(inst: FillInInstance, admissible: Admissible | None = None, stats: dict | None = None) -> list[FillInInstance]:
    """All leaves of the branching tree, depth first, deduplicated on
    ``(graph, k)``.

    A leaf is either non-reducible or already chordal (chordal instances are
    YES and are not branched further).  With ``k = 0`` the instance is a
    leaf exactly when it is chordal.
    """
    leaves = []
    seen = set()
    stack = [inst]
    nodes = 0
    while stack:
        cur = stack.pop()
        key = (cur.graph, cur.k)
        if key in seen:
            continue
        seen.add(key)
        nodes += 1
        if _is_chordal(cur.graph):
            leaves.append(cur)
            continue
        if cur.k == 0:
            continue
        wit = find_obscured_path(cur)
        if wit is None:
            leaves.append(cur)
            continue
        stack.extend(reversed(apply_branch(cur, wit, admissible)))
    if stats is not None:
        stats["branch_nodes"] = stats.get("branch_nodes", 0) + nodes
        stats["branch_leaves"] = stats.get("branch_leaves", 0) + len(leaves)
    return leaves
