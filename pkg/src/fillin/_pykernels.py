"""Pure-Python bitset kernels.

Vertex sets are Python ints used as bitmasks; ``adj[v]`` is the neighbour
mask of ``v``.  The compiled twin in ``_ckernels.pyx`` exposes the same
functions with the same semantics and falls back here for graphs with more
than 64 vertices.
"""


def iter_bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def components(adj, mask):
    """Connected components of the subgraph induced by ``mask``.

    Components are returned as masks ordered by their smallest vertex.
    """
    comps = []
    rest = mask
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= adj[v]
            frontier = reach & rest & ~comp
            comp |= frontier
        comps.append(comp)
        rest &= ~comp
    return comps


def neighborhood(adj, mask):
    reach = 0
    for v in iter_bits(mask):
        reach |= adj[v]
    return reach & ~mask


def fill_count(adj, mask):
    missing = 0
    for v in iter_bits(mask):
        missing += (mask & ~adj[v]).bit_count() - 1
    return missing // 2


def pmc_separators(adj, omega):
    """Return the separators ``N(C)`` of the components of ``G - omega`` when
    ``omega`` is a potential maximal clique, otherwise ``None``."""
    full = (1 << len(adj)) - 1
    seps = []
    for comp in components(adj, full & ~omega):
        sep = neighborhood(adj, comp)
        if sep == omega:
            return None
        seps.append(sep)
    for v in iter_bits(omega):
        need = omega & ~adj[v] & ~(1 << v)
        if not need:
            continue
        for sep in seps:
            if sep >> v & 1:
                need &= ~sep
                if not need:
                    break
        if need:
            return None
    return seps


def peo(adj, within=None):
    """Perfect elimination ordering of ``G[within]`` or ``None`` if that
    subgraph is not chordal.

    Maximum cardinality search picks the unnumbered vertex with the most
    numbered neighbours (smallest id on ties); the reverse of the visit order
    is then checked for the perfect elimination property.
    """
    n = len(adj)
    if within is None:
        within = (1 << n) - 1
    weight = [0] * n
    unnumbered = within
    visit = []
    while unnumbered:
        best = -1
        pick = -1
        for v in iter_bits(unnumbered):
            if weight[v] > best:
                best = weight[v]
                pick = v
        visit.append(pick)
        unnumbered &= ~(1 << pick)
        for u in iter_bits(adj[pick] & unnumbered):
            weight[u] += 1
    order = visit[::-1]
    later = within
    for v in order:
        later &= ~(1 << v)
        nb = adj[v] & later
        if nb:
            # earliest later neighbour in elimination order = lowest position
            parent = None
            for u in order:
                if nb >> u & 1:
                    parent = u
                    break
            rest = nb & ~(1 << parent)
            if rest & ~adj[parent]:
                return None
    return order


def mcs_m(adj, within=None):
    """Minimal triangulation of ``G[within]`` by MCS-M.

    Returns ``(order, hadj)``: the minimal elimination ordering (first
    eliminated first) and the adjacency masks of the triangulation, with
    vertices outside ``within`` left untouched.
    """
    n = len(adj)
    if within is None:
        within = (1 << n) - 1
    hadj = list(adj)
    for v in iter_bits(within):
        hadj[v] = adj[v] & within
    weight = [0] * n
    unnumbered = within
    visit = []
    while unnumbered:
        best = -1
        pick = -1
        for v in iter_bits(unnumbered):
            if weight[v] > best:
                best = weight[v]
                pick = v
        visit.append(pick)
        unnumbered &= ~(1 << pick)
        if not unnumbered:
            break
        # vertices reachable from pick through unnumbered vertices of
        # weight strictly below each target's weight
        levels = sorted({weight[v] for v in iter_bits(unnumbered)})
        bump = []
        for w in levels:
            low = 0
            for v in iter_bits(unnumbered):
                if weight[v] < w:
                    low |= 1 << v
            reach = adj[pick] & low
            frontier = reach
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= adj[v]
                frontier = nxt & low & ~reach
                reach |= frontier
            touch = adj[pick]
            for v in iter_bits(reach):
                touch |= adj[v]
            for u in iter_bits(unnumbered):
                if weight[u] == w and touch >> u & 1:
                    bump.append(u)
        for u in bump:
            weight[u] += 1
            if not adj[pick] >> u & 1:
                hadj[pick] |= 1 << u
                hadj[u] |= 1 << pick
    return visit[::-1], hadj
