"""Chordality, chordless cycles, elimination game and minimal triangulations."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import _kernels
from ._kernels import iter_bits
from .graph import EdgePair, Graph, VertexSet, from_mask, pairs_in

EliminationOrdering = tuple  # position i -> vertex eliminated i-th


@dataclass(frozen=True)
class Triangulation:
    base: Graph
    fill: frozenset
    result: Graph
    ordering: EliminationOrdering | None = None

    @classmethod
    def from_fill(cls, base: Graph, fill, ordering=None) -> "Triangulation":
        fill = frozenset(fill)
        return cls(base, fill, base.with_edges(fill), ordering)


def _check_ordering(g: Graph, pi: Sequence[int]) -> tuple:
    pi = tuple(pi)
    if sorted(pi) != list(range(g.n)):
        raise ValueError(f"ordering is not a permutation of 0..{g.n - 1}")
    return pi


def is_chordal(g: Graph) -> bool:
    return _kernels.peo(g.adj) is not None


def perfect_elimination_ordering(g: Graph) -> EliminationOrdering | None:
    order = _kernels.peo(g.adj)
    return None if order is None else tuple(order)


def chordless_cycle_mask(adj: Sequence[int], within: int) -> list[int] | None:
    """Chordless cycle of length >= 4 inside ``G[within]`` or ``None``.

    For each vertex ``v`` (ascending) and each component ``C`` of
    ``G[within] - N[v]``, a non-adjacent pair ``a < b`` in ``N(C) ⊆ N(v)``
    closes a chordless cycle ``v, a, (shortest a-b path through C), b``.
    """
    for v in iter_bits(within):
        closed = (adj[v] & within) | (1 << v)
        for comp in _kernels.components(adj, within & ~closed):
            touch = 0
            for c in iter_bits(comp):
                touch |= adj[c]
            sep = touch & adj[v] & within
            for a in iter_bits(sep):
                far = sep & ~adj[a] & ~((2 << a) - 1)
                if far:
                    b = (far & -far).bit_length() - 1
                    return [v] + _shortest_path(adj, a, b, comp)
    return None


def _shortest_path(adj, src: int, dst: int, inner: int) -> list[int]:
    # BFS from src to dst with internal vertices in ``inner``; ids scanned in
    # ascending order so ties go to the smallest vertex.
    parent = {src: None}
    frontier = [src]
    while frontier:
        nxt = []
        for x in frontier:
            if adj[x] >> dst & 1:
                parent[dst] = x
                path = [dst]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path[::-1]
            for y in iter_bits(adj[x] & inner):
                if y not in parent:
                    parent[y] = x
                    nxt.append(y)
        frontier = nxt
    raise ValueError(f"no path from {src} to {dst}")


def find_chordless_cycle(g: Graph) -> list[int] | None:
    """Chordless cycle of length at least four, or ``None`` if ``g`` is chordal."""
    return chordless_cycle_mask(g.adj, g.full)


def elimination_game(g: Graph, pi: Sequence[int]) -> Triangulation:
    """Eliminate vertices in order ``pi``, completing the not-yet-eliminated
    neighbourhood of each one; the accumulated edges are the fill."""
    pi = _check_ordering(g, pi)
    adj = list(g.adj)
    remaining = g.full
    fill = set()
    for v in pi:
        remaining &= ~(1 << v)
        later = adj[v] & remaining
        for a in iter_bits(later):
            missing = later & ~adj[a] & ~((2 << a) - 1)
            for b in iter_bits(missing):
                fill.add((a, b))
        for a in iter_bits(later):
            adj[a] |= later & ~(1 << a)
    return Triangulation(g, frozenset(fill), Graph._trusted(g.n, adj, g.labels), pi)


def is_minimal_triangulation(t: Triangulation) -> bool:
    if t.fill & set(t.base.edges()):
        return False
    if not is_chordal(t.result):
        return False
    for e in t.fill:
        if is_chordal(t.result.without_edges([e])):
            return False
    return True


def minimal_triangulation(g: Graph) -> Triangulation:
    """Minimal triangulation by MCS-M (ties broken towards the smallest id)."""
    order, hadj = _kernels.mcs_m(g.adj)
    fill = set()
    for v in range(g.n):
        for u in iter_bits(hadj[v] & ~g.adj[v] & ~((2 << v) - 1)):
            fill.add((v, u))
    return Triangulation(g, frozenset(fill), Graph._trusted(g.n, hadj, g.labels), tuple(order))


def cliques_from_peo(adj: Sequence[int], order: Sequence[int]) -> list[int]:
    """Maximal cliques (as masks) of a chordal graph given a perfect
    elimination ordering of the vertices in ``order``."""
    remaining = 0
    for v in order:
        remaining |= 1 << v
    cands = []
    for v in order:
        remaining &= ~(1 << v)
        cands.append((adj[v] & remaining) | (1 << v))
    cands.sort(key=lambda m: -m.bit_count())
    maximal = []
    for c in cands:
        if not any(c & k == c for k in maximal):
            maximal.append(c)
    return maximal


def separators_from_cliques(cliques: Sequence[int]) -> list[int]:
    """Edge labels of a clique tree built as a maximum-weight spanning tree
    of the clique intersection graph (Prim, deterministic)."""
    if len(cliques) < 2:
        return []
    in_tree = [False] * len(cliques)
    in_tree[0] = True
    best = [(cliques[0] & c).bit_count() for c in cliques]
    link = [0] * len(cliques)
    seps = []
    for _ in range(len(cliques) - 1):
        pick = -1
        for i, c in enumerate(cliques):
            if not in_tree[i] and (pick < 0 or best[i] > best[pick]):
                pick = i
        in_tree[pick] = True
        seps.append(cliques[pick] & cliques[link[pick]])
        for i, c in enumerate(cliques):
            if not in_tree[i]:
                w = (cliques[pick] & c).bit_count()
                if w > best[i]:
                    best[i] = w
                    link[i] = pick
    return seps


def _require_chordal(h: Graph) -> list[int]:
    order = _kernels.peo(h.adj)
    if order is None:
        raise ValueError("graph is not chordal")
    return order


def maximal_cliques_chordal(h: Graph) -> list[VertexSet]:
    order = _require_chordal(h)
    return sorted(from_mask(c) for c in cliques_from_peo(h.adj, order))


def minimal_separators_chordal(h: Graph) -> list[VertexSet]:
    order = _require_chordal(h)
    cliques = cliques_from_peo(h.adj, order)
    out = set()
    for sep in separators_from_cliques(cliques):
        full = 0
        for comp in _kernels.components(h.adj, h.full & ~sep):
            if _kernels.neighborhood(h.adj, comp) == sep:
                full += 1
        if full >= 2:
            out.add(from_mask(sep))
    return sorted(out)


def fill_edges(base: Graph, result_adj: Sequence[int]) -> list[EdgePair]:
    out = []
    for v in range(base.n):
        out.extend((v, u) for u in iter_bits(result_adj[v] & ~base.adj[v] & ~((2 << v) - 1)))
    return out


__all__ = [
    "EliminationOrdering",
    "Triangulation",
    "is_chordal",
    "perfect_elimination_ordering",
    "find_chordless_cycle",
    "elimination_game",
    "is_minimal_triangulation",
    "minimal_triangulation",
    "maximal_cliques_chordal",
    "minimal_separators_chordal",
    "pairs_in",
]
