"""Potential maximal cliques: verification, quasi-clique and vital enumeration.

A set ``omega`` is a PMC when ``G - omega`` has no component whose
neighbourhood is all of ``omega`` and completing every such neighbourhood
turns ``G[omega]`` into a clique.  Enumeration follows a bounded search over
small "defect" sets ``Z``: a large PMC is recovered from ``Z`` together with
a minimal triangulation of ``G - Z``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from . import _kernels
from ._kernels import iter_bits
from .chordal import cliques_from_peo, separators_from_cliques
from .graph import Graph, VertexSet, complete_mask, from_mask, to_mask


def ceil_sqrt(k: int) -> int:
    """Smallest ``t`` with ``t*t >= k``; every square-root threshold uses it."""
    t = math.isqrt(k)
    return t if t * t == k else t + 1


@dataclass(frozen=True)
class Pmc:
    omega: VertexSet
    separators: tuple
    fill: int
    mask: int = field(default=0, repr=False, compare=False)


@dataclass
class PmcCatalog:
    """Deduplicated PMCs of one graph, keyed by canonical omega.

    ``budget`` is the vitality bound the entries were filtered with (``None``
    for unfiltered catalogs); ``fingerprint`` identifies the source graph.
    """

    fingerprint: str
    budget: int | None = None
    entries: dict = field(default_factory=dict)

    def add(self, pmc: Pmc) -> None:
        self.entries.setdefault(pmc.omega, pmc)

    def __len__(self):
        return len(self.entries)

    def __iter__(self) -> Iterator[Pmc]:
        return iter(sorted(self.entries.values(), key=lambda p: p.omega))

    def __contains__(self, omega) -> bool:
        return tuple(sorted(omega)) in self.entries

    def omegas(self) -> set:
        return set(self.entries)

    def filtered(self, keep, budget=None) -> "PmcCatalog":
        out = PmcCatalog(self.fingerprint, self.budget if budget is None else budget)
        for p in self.entries.values():
            if keep(p):
                out.add(p)
        return out


def _make_pmc(adj, mask: int, seps) -> Pmc:
    return Pmc(
        from_mask(mask),
        tuple(sorted(set(from_mask(s) for s in seps))),
        _kernels.fill_count(adj, mask),
        mask,
    )


def full_components(g: Graph, s: Iterable[int]) -> list[VertexSet]:
    smask = to_mask(s)
    return [
        from_mask(c)
        for c in _kernels.components(g.adj, g.full & ~smask)
        if _kernels.neighborhood(g.adj, c) == smask
    ]


def is_minimal_separator(g: Graph, s: Iterable[int]) -> bool:
    return len(full_components(g, s)) >= 2


def verify_pmc(g: Graph, omega: Iterable[int]) -> Pmc | None:
    mask = to_mask(omega)
    if not mask:
        raise ValueError("omega must be nonempty")
    seps = _kernels.pmc_separators(g.adj, mask)
    if seps is None:
        return None
    return _make_pmc(g.adj, mask, seps)


def is_vital(g: Graph, omega: Iterable[int], k: int) -> bool:
    return _kernels.fill_count(g.adj, to_mask(omega)) <= k


def _subsets(n: int, max_size: int) -> Iterator[int]:
    for size in range(0, min(max_size, n) + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            yield mask


def _low_fill_subsets(adj: Sequence[int], max_size: int, max_fill: int) -> Iterator[int]:
    """Nonempty vertex sets of size <= max_size missing at most max_fill
    edges.  Fill only grows with the set, so the search prunes early."""
    n = len(adj)
    stack = [(0, 0, 0, -1)]
    while stack:
        mask, size, fill, last = stack.pop()
        if mask:
            yield mask
        if size == max_size:
            continue
        for v in range(n - 1, last, -1):
            extra = (mask & ~adj[v]).bit_count()
            if fill + extra <= max_fill:
                stack.append((mask | 1 << v, size + 1, fill + extra, v))


def _quasi_candidates(adj: Sequence[int], zmask: int) -> Iterator[int]:
    """Candidate PMCs ``X ∪ Z`` for a fixed defect set ``Z``.

    Covers the three shapes of ``X = omega - Z``: a clique minimal
    separator of ``G - Z``, a maximal clique of a minimal triangulation of
    ``G - Z``, or (one full component) the set ``N(Y) ∪ {y}`` rebuilt from a
    vertex ``y`` of ``Z``.
    """
    n = len(adj)
    full = (1 << n) - 1
    rest = full & ~zmask
    if zmask:
        yield zmask
    if not rest:
        return
    order, hadj = _kernels.mcs_m(adj, rest)
    cliques = cliques_from_peo(hadj, order)
    for sep in separators_from_cliques(cliques):
        if sep and _kernels.fill_count(adj, sep) == 0:
            yield sep | zmask
    for k in cliques:
        if _kernels.fill_count(adj, k) == 0:
            yield k | zmask
    if not zmask:
        return
    for k in cliques:
        comps = _kernels.components(adj, rest & ~k)
        for y in iter_bits(zmask):
            ymask = 1 << y
            for comp in comps:
                if comp & adj[y]:
                    ymask |= comp
            yield _kernels.neighborhood(adj, ymask) | (1 << y)


def _quasi_clique_masks(adj: Sequence[int], t: int, z_fill_limit: int | None = None) -> dict:
    """Map mask -> separators for every PMC found by the defect-set search
    with ``|Z| <= 5t``.  ``z_fill_limit`` skips defect sets whose own fill
    exceeds it (a vital PMC cannot contain such a ``Z``)."""
    found = {}
    rejected = set()
    for zmask in _subsets(len(adj), 5 * t):
        if z_fill_limit is not None and _kernels.fill_count(adj, zmask) > z_fill_limit:
            continue
        for cand in _quasi_candidates(adj, zmask):
            if cand in found or cand in rejected:
                continue
            seps = _kernels.pmc_separators(adj, cand)
            if seps is None:
                rejected.add(cand)
            else:
                found[cand] = seps
    return found


def enumerate_quasi_cliques(g: Graph, k: int) -> PmcCatalog:
    """All PMCs that become cliques after deleting at most ``5*ceil(sqrt(k))``
    vertices (the output may contain further PMCs; every entry is verified)."""
    if k < 0:
        raise ValueError("budget must be non-negative")
    cat = PmcCatalog(g.fingerprint())
    for mask, seps in _quasi_clique_masks(g.adj, ceil_sqrt(k)).items():
        cat.add(_make_pmc(g.adj, mask, seps))
    return cat


def vital_pmc_masks(adj: Sequence[int], k: int) -> dict:
    """Map mask -> separators for the vital PMCs of a non-reducible instance."""
    n = len(adj)
    if k == 0:
        order = _kernels.peo(adj)
        if order is not None:
            return {c: _kernels.pmc_separators(adj, c) for c in cliques_from_peo(adj, order)}
    t = ceil_sqrt(k)
    bound = 5 * t + 2
    found = {}
    for mask in _low_fill_subsets(adj, bound, k):
        seps = _kernels.pmc_separators(adj, mask)
        if seps is not None:
            found[mask] = seps
    if bound >= n:
        # every vertex subset was already examined
        return found
    for mask, seps in _quasi_clique_masks(adj, t, k).items():
        if mask not in found and _kernels.fill_count(adj, mask) <= k:
            found[mask] = seps
    for w in range(n):
        hadj = complete_mask(adj, adj[w])
        for mask in _quasi_clique_masks(hadj, t, k):
            if mask in found or _kernels.fill_count(adj, mask) > k:
                continue
            seps = _kernels.pmc_separators(adj, mask)
            if seps is not None:
                found[mask] = seps
    return found


def enumerate_vital_pmcs(g: Graph, k: int) -> PmcCatalog:
    """Every PMC of ``g`` missing at most ``k`` edges, provided ``(g, k)`` is
    non-reducible for the branching rule.  Output is always sound."""
    if k < 0:
        raise ValueError("budget must be non-negative")
    cat = PmcCatalog(g.fingerprint(), k)
    for mask, seps in vital_pmc_masks(g.adj, k).items():
        cat.add(_make_pmc(g.adj, mask, seps))
    return cat


def dump_catalog(catalog: PmcCatalog, labels: Sequence[str] | None = None) -> str:
    """One PMC per line, sorted ids separated by spaces."""
    lines = []
    for p in catalog:
        ids = p.omega if labels is None else [labels[v] for v in p.omega]
        lines.append(" ".join(str(v) for v in ids))
    return "".join(line + "\n" for line in lines)


def load_catalog(text: str, g: Graph, budget: int | None = None) -> PmcCatalog:
    """Parse the line format back, re-verifying every set against ``g``."""
    cat = PmcCatalog(g.fingerprint(), budget)
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            ids = [int(tok) for tok in line.split()]
        except ValueError:
            raise ValueError(f"line {lineno}: expected vertex ids, got {raw!r}") from None
        if any(not 0 <= v < g.n for v in ids):
            raise ValueError(f"line {lineno}: vertex id out of range")
        pmc = verify_pmc(g, ids)
        if pmc is None:
            raise ValueError(f"line {lineno}: {sorted(ids)} is not a potential maximal clique")
        cat.add(pmc)
    return cat
