# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels (graphs with at most 64 vertices).

Same signatures and results as ``_pykernels``; larger graphs are delegated
to the pure-Python implementation.
"""
from libc.stdint cimport uint64_t

from . import _pykernels

cdef extern from *:
    int ctz64 "__builtin_ctzll"(unsigned long long)
    int popcount64 "__builtin_popcountll"(unsigned long long)

DEF MAXN = 64


cdef inline uint64_t bit(int v):
    return (<uint64_t>1) << v


cdef inline uint64_t full_mask(int n):
    if n == 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return (bit(n)) - 1


cdef int load(adj, uint64_t* a) except -1:
    cdef int n = len(adj)
    cdef int i
    for i in range(n):
        a[i] = <uint64_t>adj[i]
    return n


cdef uint64_t grow(const uint64_t* a, uint64_t seed, uint64_t allowed):
    cdef uint64_t comp = seed, frontier = seed, reach, m
    while frontier:
        reach = 0
        m = frontier
        while m:
            reach |= a[ctz64(m)]
            m &= m - 1
        frontier = reach & allowed & ~comp
        comp |= frontier
    return comp


cdef uint64_t nbhd(const uint64_t* a, uint64_t mask):
    cdef uint64_t reach = 0, m = mask
    while m:
        reach |= a[ctz64(m)]
        m &= m - 1
    return reach & ~mask


cdef int c_components(const uint64_t* a, uint64_t mask, uint64_t* out):
    cdef int count = 0
    cdef uint64_t rest = mask, comp
    while rest:
        comp = grow(a, rest & (~rest + 1), rest)
        out[count] = comp
        count += 1
        rest &= ~comp
    return count


def components(adj, mask):
    if len(adj) > MAXN:
        return _pykernels.components(adj, mask)
    cdef uint64_t a[MAXN]
    cdef uint64_t out[MAXN]
    load(adj, a)
    cdef int count = c_components(a, <uint64_t>mask, out)
    return [out[i] for i in range(count)]


def neighborhood(adj, mask):
    if len(adj) > MAXN:
        return _pykernels.neighborhood(adj, mask)
    cdef uint64_t a[MAXN]
    load(adj, a)
    return nbhd(a, <uint64_t>mask)


def fill_count(adj, mask):
    if len(adj) > MAXN:
        return _pykernels.fill_count(adj, mask)
    cdef uint64_t a[MAXN]
    load(adj, a)
    cdef uint64_t m = <uint64_t>mask, rest = m
    cdef long missing = 0
    cdef int v
    while rest:
        v = ctz64(rest)
        rest &= rest - 1
        missing += popcount64(m & ~a[v]) - 1
    return missing // 2


def pmc_separators(adj, omega):
    if len(adj) > MAXN:
        return _pykernels.pmc_separators(adj, omega)
    cdef uint64_t a[MAXN]
    cdef uint64_t comps[MAXN]
    cdef uint64_t seps[MAXN]
    cdef int n = load(adj, a)
    cdef uint64_t om = <uint64_t>omega
    cdef int count = c_components(a, full_mask(n) & ~om, comps)
    cdef int i, v
    cdef uint64_t need, rest
    for i in range(count):
        seps[i] = nbhd(a, comps[i])
        if seps[i] == om:
            return None
    rest = om
    while rest:
        v = ctz64(rest)
        rest &= rest - 1
        need = om & ~a[v] & ~bit(v)
        i = 0
        while need and i < count:
            if seps[i] & bit(v):
                need &= ~seps[i]
            i += 1
        if need:
            return None
    return [seps[i] for i in range(count)]


cdef int c_peo(const uint64_t* a, int n, uint64_t within, int* order):
    """Fill ``order`` with a perfect elimination ordering; return its length,
    or -1 if ``G[within]`` is not chordal."""
    cdef int weight[MAXN]
    cdef int pos[MAXN]
    cdef int i, v, best, pick, count = 0, j, parent, p
    cdef uint64_t unnumbered = within, m, nb, later
    for i in range(n):
        weight[i] = 0
    while unnumbered:
        best = -1
        pick = -1
        m = unnumbered
        while m:
            v = ctz64(m)
            m &= m - 1
            if weight[v] > best:
                best = weight[v]
                pick = v
        order[count] = pick
        count += 1
        unnumbered &= ~bit(pick)
        m = a[pick] & unnumbered
        while m:
            weight[ctz64(m)] += 1
            m &= m - 1
    # reverse visit order into elimination order
    for i in range(count // 2):
        j = order[i]
        order[i] = order[count - 1 - i]
        order[count - 1 - i] = j
    for i in range(count):
        pos[order[i]] = i
    later = within
    for i in range(count):
        v = order[i]
        later &= ~bit(v)
        nb = a[v] & later
        if nb:
            parent = -1
            p = MAXN
            m = nb
            while m:
                j = ctz64(m)
                m &= m - 1
                if pos[j] < p:
                    p = pos[j]
                    parent = j
            if (nb & ~bit(parent)) & ~a[parent]:
                return -1
    return count


def peo(adj, within=None):
    if len(adj) > MAXN:
        return _pykernels.peo(adj, within)
    cdef uint64_t a[MAXN]
    cdef int order[MAXN]
    cdef int n = load(adj, a)
    cdef uint64_t w = full_mask(n) if within is None else <uint64_t>within
    cdef int count = c_peo(a, n, w, order)
    if count < 0:
        return None
    return [order[i] for i in range(count)]


def mcs_m(adj, within=None):
    if len(adj) > MAXN:
        return _pykernels.mcs_m(adj, within)
    cdef uint64_t a[MAXN]
    cdef uint64_t h[MAXN]
    cdef int weight[MAXN]
    cdef int bump[MAXN]
    cdef int visit[MAXN]
    cdef int n = load(adj, a)
    cdef uint64_t w = full_mask(n) if within is None else <uint64_t>within
    cdef uint64_t unnumbered = w, m, low, reach, frontier, nxt, touch, seen_levels
    cdef int i, v, u, best, pick, count = 0, nbump, lvl
    for i in range(n):
        weight[i] = 0
        h[i] = a[i] & w if (w >> i) & 1 else a[i]
    while unnumbered:
        best = -1
        pick = -1
        m = unnumbered
        while m:
            v = ctz64(m)
            m &= m - 1
            if weight[v] > best:
                best = weight[v]
                pick = v
        visit[count] = pick
        count += 1
        unnumbered &= ~bit(pick)
        if not unnumbered:
            break
        nbump = 0
        # weights are < n <= 64, so the set of levels fits one mask
        seen_levels = 0
        m = unnumbered
        while m:
            seen_levels |= bit(weight[ctz64(m)])
            m &= m - 1
        while seen_levels:
            lvl = ctz64(seen_levels)
            seen_levels &= seen_levels - 1
            low = 0
            m = unnumbered
            while m:
                v = ctz64(m)
                m &= m - 1
                if weight[v] < lvl:
                    low |= bit(v)
            reach = a[pick] & low
            frontier = reach
            while frontier:
                nxt = 0
                m = frontier
                while m:
                    nxt |= a[ctz64(m)]
                    m &= m - 1
                frontier = nxt & low & ~reach
                reach |= frontier
            touch = a[pick]
            m = reach
            while m:
                touch |= a[ctz64(m)]
                m &= m - 1
            m = unnumbered
            while m:
                u = ctz64(m)
                m &= m - 1
                if weight[u] == lvl and (touch >> u) & 1:
                    bump[nbump] = u
                    nbump += 1
        for i in range(nbump):
            u = bump[i]
            weight[u] += 1
            if not (a[pick] >> u) & 1:
                h[pick] |= bit(u)
                h[u] |= bit(pick)
    order = [visit[count - 1 - i] for i in range(count)]
    if len(adj) == 0:
        return order, []
    return order, [h[i] for i in range(n)]
