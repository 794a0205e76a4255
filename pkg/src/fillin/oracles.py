"""Brute-force references for testing.

Everything here works on plain Python sets and avoids the solver's helpers,
so a shared bug cannot hide on both sides of a comparison.
"""
from __future__ import annotations

from itertools import combinations, permutations

from .graph import Graph


def _adjsets(g: Graph) -> list[set]:
    return [set(g.neighbors(v)) for v in range(g.n)]


def _chordal_sets(adj: list[set]) -> bool:
    # repeatedly strip a simplicial vertex
    alive = set(range(len(adj)))
    while alive:
        for v in sorted(alive):
            nb = adj[v] & alive
            if all(b in adj[a] for a, b in combinations(nb, 2)):
                alive.discard(v)
                break
        else:
            return False
    return True


def _chordless_cycle(adj: list[set]) -> list[int] | None:
    """Some chordless cycle of length >= 4 found by DFS over induced paths."""
    n = len(adj)

    def extend(path, inside):
        last = path[-1]
        for w in sorted(adj[last]):
            if w in inside:
                continue
            touches = [p for p in path[1:-1] if w in adj[p]]
            if touches:
                continue
            if len(path) >= 3 and path[0] in adj[w]:
                return path + [w]
            if path[0] in adj[w]:
                continue
            found = extend(path + [w], inside | {w})
            if found:
                return found
        return None

    for s in range(n):
        for a in sorted(adj[s]):
            hit = extend([s, a], {s, a})
            if hit:
                return hit
    return None


def _guard(ok: bool, what: str) -> None:
    if not ok:
        raise ValueError(f"oracle size guard: {what}")


def oracle_mfi(g: Graph, limit: int | None = None) -> int:
    """Exact minimum fill-in by chord branching on chordless cycles.

    Any triangulation adds a chord to every chordless cycle, so the minimum
    is one plus the best over the cycle's non-adjacent pairs.  Iterative
    deepening with a cycle-length lower bound keeps it fast.  With ``limit``
    the search stops early and returns ``limit + 1`` when the answer exceeds
    ``limit``.
    """
    _guard(g.n <= 16, "n must be at most 16")
    base = frozenset(g.edges())
    n = g.n
    failed: dict = {}

    def feasible(edges: frozenset, budget: int) -> bool:
        if failed.get(edges, -1) >= budget:
            return False
        adj = [set() for _ in range(n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        cyc = _chordless_cycle(adj)
        if cyc is None:
            return True
        if budget < len(cyc) - 3:
            failed[edges] = budget
            return False
        for a, b in combinations(cyc, 2):
            if b in adj[a]:
                continue
            if feasible(edges | {(min(a, b), max(a, b))}, budget - 1):
                return True
        failed[edges] = budget
        return False

    top = n * (n - 1) // 2 if limit is None else limit
    for budget in range(top + 1):
        if feasible(base, budget):
            return budget
    return top + 1


def _elimination_fill(adjs: list[set], order) -> set:
    adj = [set(a) for a in adjs]
    done = set()
    fill = set()
    for v in order:
        later = adj[v] - done
        for a, b in combinations(sorted(later), 2):
            if b not in adj[a]:
                adj[a].add(b)
                adj[b].add(a)
                fill.add((a, b))
        done.add(v)
    return fill


def oracle_mfi_orderings(g: Graph) -> int:
    """Minimum fill over all ``n!`` elimination orderings."""
    _guard(g.n <= 8, "n must be at most 8")
    adj = _adjsets(g)
    return min((len(_elimination_fill(adj, p)) for p in permutations(range(g.n))), default=0)


def _maximal_cliques(adj: list[set]) -> set:
    n = len(adj)
    cliques = set()
    for size in range(n, 0, -1):
        for combo in combinations(range(n), size):
            if all(b in adj[a] for a, b in combinations(combo, 2)):
                s = frozenset(combo)
                if not any(s < c for c in cliques):
                    cliques.add(s)
    return cliques


def oracle_pmcs(g: Graph) -> set:
    """Union of the maximal cliques of every minimal triangulation reached
    by some elimination ordering."""
    _guard(g.n <= 8, "n must be at most 8")
    base = _adjsets(g)
    seen = set()
    out = set()
    for p in permutations(range(g.n)):
        fill = frozenset(_elimination_fill(base, p))
        if fill in seen:
            continue
        seen.add(fill)
        adj = [set(a) for a in base]
        for a, b in fill:
            adj[a].add(b)
            adj[b].add(a)
        minimal = True
        for a, b in fill:
            adj[a].discard(b)
            adj[b].discard(a)
            if _chordal_sets(adj):
                minimal = False
            adj[a].add(b)
            adj[b].add(a)
            if not minimal:
                break
        if minimal:
            out |= {tuple(sorted(c)) for c in _maximal_cliques(adj)}
    return out


def oracle_sandwich(inst) -> bool:
    """Is there ``F ⊆ allowed`` with ``|F| <= k`` making the graph chordal?"""
    allowed = sorted(inst.allowed)
    _guard(len(allowed) <= 24, "at most 24 allowed pairs")
    base = _adjsets(inst.graph)
    for size in range(min(inst.k, len(allowed)) + 1):
        for extra in combinations(allowed, size):
            adj = [set(a) for a in base]
            for a, b in extra:
                adj[a].add(b)
                adj[b].add(a)
            if _chordal_sets(adj):
                return True
    return False


def _chain_ok(left, right, edges: set) -> bool:
    nbrs = [frozenset(r for r in right if (min(l, r), max(l, r)) in edges) for l in left]
    return all(a <= b or b <= a for a, b in combinations(nbrs, 2))


def oracle_chain(b) -> int:
    """Fewest cross edges to add so that left neighbourhoods form a chain."""
    cross = sorted(
        (min(l, r), max(l, r))
        for l in b.left
        for r in b.right
        if (min(l, r), max(l, r)) not in b.edges
    )
    _guard(len(cross) <= 24, "at most 24 cross non-edges")
    edges = set(b.edges)
    for size in range(len(cross) + 1):
        for extra in combinations(cross, size):
            if _chain_ok(b.left, b.right, edges | set(extra)):
                return size
    raise AssertionError("completing every cross pair always gives a chain graph")
