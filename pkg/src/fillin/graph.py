"""Immutable simple graphs on dense integer ids and vertex-set primitives.

Vertex sets in the public API are sorted tuples of ids (the canonical form
used for keys and output); internally every module works on int bitmasks.
"""
from __future__ import annotations

import hashlib
from typing import Iterable, Sequence

from . import _kernels
from ._kernels import iter_bits

VertexSet = tuple  # sorted, duplicate-free tuple of vertex ids
EdgePair = tuple  # (u, v) with u < v


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> VertexSet:
    return tuple(iter_bits(mask))


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    return tuple(sorted(set(vertices)))


def edge_pair(u: int, v: int) -> EdgePair:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def pairs_in(mask: int, adj: Sequence[int] | None = None) -> list[EdgePair]:
    """All pairs inside ``mask``; only non-edges when ``adj`` is given."""
    out = []
    for u in iter_bits(mask):
        rest = mask >> (u + 1) << (u + 1)
        if adj is not None:
            rest &= ~adj[u]
        out.extend((u, v) for v in iter_bits(rest))
    return out


class Graph:
    """Simple undirected graph with vertices ``0..n-1``.

    ``adj[v]`` is the bitmask of neighbours of ``v``.  Instances are treated
    as immutable; every modifying operation returns a new graph.  ``labels``
    optionally maps ids to the names used in the input file.
    """

    __slots__ = ("n", "adj", "labels", "_key")

    def __init__(self, n: int, adj: Sequence[int], labels: Sequence[str] | None = None):
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency masks, got {len(adj)}")
        limit = (1 << n) - 1
        for v, nb in enumerate(adj):
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if nb & ~limit:
                raise ValueError(f"vertex {v} has a neighbour id >= {n}")
            for u in iter_bits(nb):
                if not adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric for {u}-{v}")
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError("labels must name every vertex")
        self.n = n
        self.adj = adj
        self.labels = labels
        self._key = None

    @classmethod
    def _trusted(cls, n, adj, labels=None) -> "Graph":
        # internal constructor for adjacency already known to be valid
        g = object.__new__(cls)
        g.n = n
        g.adj = tuple(adj)
        g.labels = labels
        g._key = None
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, labels)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, [full & ~(1 << v) for v in range(n)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    @property
    def adjacency(self) -> tuple[VertexSet, ...]:
        return tuple(from_mask(nb) for nb in self.adj)

    def neighbors(self, v: int) -> VertexSet:
        return from_mask(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[EdgePair]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[EdgePair]:
        return pairs_in(self.full, self.adj)

    def with_edges(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph._trusted(self.n, adj, self.labels)

    def without_edges(self, pairs: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in pairs:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph._trusted(self.n, adj, self.labels)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Subgraph on ``vertices`` relabelled to ``0..len-1`` in sorted order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            adj.append(to_mask(index[u] for u in iter_bits(self.adj[v]) if u in index))
        labels = None if self.labels is None else [self.labels[v] for v in keep]
        return Graph._trusted(len(keep), adj, labels)

    def label(self, v: int) -> str:
        return str(v) if self.labels is None else self.labels[v]

    def fingerprint(self) -> str:
        h = hashlib.sha1(str(self.n).encode())
        for nb in self.adj:
            h.update(b"," + format(nb, "x").encode())
        return h.hexdigest()

    def _ident(self):
        if self._key is None:
            self._key = (self.n, self.adj)
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def components(g: Graph, removed: Iterable[int] = ()) -> list[VertexSet]:
    """Connected components of ``g - removed``, ordered by smallest member."""
    rest = g.full & ~to_mask(removed)
    return [from_mask(c) for c in _kernels.components(g.adj, rest)]


def neighborhood(g: Graph, w: Iterable[int]) -> VertexSet:
    return from_mask(_kernels.neighborhood(g.adj, to_mask(w)))


def fill_count(g: Graph, w: Iterable[int]) -> int:
    """Number of non-adjacent pairs inside ``w``."""
    return _kernels.fill_count(g.adj, to_mask(w))


def complete_set(g: Graph, w: Iterable[int]) -> Graph:
    mask = to_mask(w)
    adj = list(g.adj)
    for v in iter_bits(mask):
        adj[v] |= mask & ~(1 << v)
    return Graph._trusted(g.n, adj, g.labels)


def is_clique(g: Graph, w: Iterable[int]) -> bool:
    return _kernels.fill_count(g.adj, to_mask(w)) == 0


def complete_mask(adj: Sequence[int], mask: int) -> list[int]:
    out = list(adj)
    for v in iter_bits(mask):
        out[v] |= mask & ~(1 << v)
    return out
