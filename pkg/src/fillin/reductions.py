"""Chain completion, colored triangulation and chordal sandwich solvers.

Chain completion of a bipartite graph is fill-in of the graph obtained by
turning both sides into cliques.  A colored graph is a sandwich instance
whose allowed pairs are the bichromatic non-edges.
"""
from __future__ import annotations

from dataclasses import dataclass

from .branching import FillInInstance
from .dp import FillSolution, VerificationError, solve, solve_sandwich_instance
from .graph import EdgePair, Graph, edge_pair
from .kernel import SandwichInstance


@dataclass(frozen=True)
class BipartiteGraph:
    left: tuple
    right: tuple
    edges: frozenset

    def __post_init__(self):
        left = tuple(sorted(set(self.left)))
        right = tuple(sorted(set(self.right)))
        if set(left) & set(right):
            raise ValueError("the two sides must be disjoint")
        side = {v: 0 for v in left}
        side.update((v, 1) for v in right)
        edges = frozenset(edge_pair(u, v) for u, v in self.edges)
        for u, v in edges:
            if u not in side or v not in side:
                raise ValueError(f"edge {u}-{v} has an endpoint outside both sides")
            if side[u] == side[v]:
                raise ValueError(f"edge {u}-{v} lies inside one side")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "edges", edges)

    @property
    def n(self) -> int:
        return len(self.left) + len(self.right)

    def cross_non_edges(self) -> list[EdgePair]:
        return sorted(
            edge_pair(a, b) for a in self.left for b in self.right if edge_pair(a, b) not in self.edges
        )


@dataclass(frozen=True)
class Coloring:
    classes: tuple

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(tuple(sorted(c)) for c in self.classes))

    @classmethod
    def from_colors(cls, colors) -> "Coloring":
        buckets = {}
        for v, c in enumerate(colors):
            buckets.setdefault(c, []).append(v)
        return cls(tuple(buckets[c] for c in sorted(buckets)))

    def color_of(self, n: int) -> list[int]:
        out = [-1] * n
        for i, cls_ in enumerate(self.classes):
            for v in cls_:
                if not 0 <= v < n:
                    raise ValueError(f"colored vertex {v} out of range")
                if out[v] != -1:
                    raise ValueError(f"vertex {v} has two colors")
                out[v] = i
        if -1 in out:
            raise ValueError(f"vertex {out.index(-1)} has no color")
        return out


def is_chain_graph(b: BipartiteGraph) -> bool:
    nbrs = {v: set() for v in b.left}
    for u, v in b.edges:
        if u in nbrs:
            nbrs[u].add(v)
        else:
            nbrs[v].add(u)
    chain = sorted(nbrs.values(), key=len)
    return all(a <= c for a, c in zip(chain, chain[1:]))


def _cobipartite(b: BipartiteGraph) -> Graph:
    verts = sorted(b.left + b.right)
    if verts != list(range(len(verts))):
        raise ValueError("bipartite vertices must be 0..n-1")
    edges = set(b.edges)
    for side in (b.left, b.right):
        edges.update(edge_pair(u, v) for i, u in enumerate(side) for v in side[i + 1:])
    return Graph.from_edges(len(verts), edges)


def chain_to_fillin(b: BipartiteGraph, k: int) -> FillInInstance:
    return FillInInstance(_cobipartite(b), k)


def solve_chain(b: BipartiteGraph, k: int, stats: dict | None = None) -> frozenset | None:
    """Cross edges completing ``b`` to a chain graph, at most ``k`` of them
    and as few as possible, or ``None``."""
    inst = chain_to_fillin(b, k)
    sol = solve(inst.graph, k, stats)
    if sol is None:
        return None
    left = set(b.left)
    for u, v in sol.fill:
        if (u in left) == (v in left):
            raise VerificationError(f"fill edge {u}-{v} lies inside one side")
    done = BipartiteGraph(b.left, b.right, b.edges | sol.fill)
    if not is_chain_graph(done):
        raise VerificationError("completed graph is not a chain graph")
    return sol.fill


def colored_to_sandwich(g: Graph, col: Coloring, k: int) -> SandwichInstance:
    color = col.color_of(g.n)
    allowed = frozenset((u, v) for u, v in g.non_edges() if color[u] != color[v])
    return SandwichInstance(g, allowed, k)


def solve_sandwich(inst: SandwichInstance, stats: dict | None = None) -> FillSolution | None:
    """Fill of at most ``k`` allowed pairs making the graph chordal (a
    smallest one), or ``None``."""
    return solve_sandwich_instance(inst, stats)


def solve_colored(g: Graph, col: Coloring, k: int, stats: dict | None = None) -> FillSolution | None:
    sol = solve_sandwich(colored_to_sandwich(g, col, k), stats)
    if sol is not None:
        color = col.color_of(g.n)
        if any(color[u] == color[v] for u, v in sol.fill):
            raise VerificationError("monochromatic fill edge")
    return sol
