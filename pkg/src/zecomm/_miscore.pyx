# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled maximum-clique kernel on 64-bit adjacency masks.

Same branch-and-bound with greedy coloring as the pure-Python twin in
``_mispure``; restricted to n <= 64 vertices (the package's exact solver
limit is well below that).
"""

from libc.stdint cimport uint64_t, int64_t


cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static inline int zc_ctz64(unsigned long long x) { return __builtin_ctzll(x); }
    #else
    static inline int zc_ctz64(unsigned long long x) {
        int c = 0;
        while (!(x & 1ULL)) { x >>= 1; c++; }
        return c;
    }
    #endif
    """
    int zc_ctz64(unsigned long long x) nogil


cdef int _best


cdef void _expand(uint64_t cand, int size, int n, uint64_t *adj,
                  int *order, int *bounds) nogil:
    global _best
    cdef uint64_t uncolored, avail, bit
    cdef int color = 0, count = 0, v, idx
    cdef uint64_t nxt

    # greedy coloring bound over the candidate set
    uncolored = cand
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            v = zc_ctz64(avail)
            bit = (<uint64_t>1) << v
            avail &= ~(adj[v] | bit)
            uncolored &= ~bit
            order[count] = v
            bounds[count] = color
            count += 1

    for idx in range(count - 1, -1, -1):
        if size + bounds[idx] <= _best:
            return
        v = order[idx]
        if size + 1 > _best:
            _best = size + 1
        nxt = cand & adj[v]
        if nxt:
            _expand(nxt, size + 1, n, adj, order + count, bounds + count)
        cand &= ~((<uint64_t>1) << v)


def max_clique_size(int n, adj_list):
    """Size of a maximum clique; ``adj_list[v]`` is the neighbor bitmask of v."""
    global _best
    if n == 0:
        return 0
    if n > 64:
        raise ValueError("compiled kernel supports at most 64 vertices")
    cdef uint64_t adj[64]
    # scratch shared across the recursion; each level consumes at most n slots
    cdef int order[64 * 65]
    cdef int bounds[64 * 65]
    cdef int v
    for v in range(n):
        adj[v] = adj_list[v]
    _best = 0
    cdef uint64_t full = ((<uint64_t>1) << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    _expand(full, 0, n, adj, order, bounds)
    return _best


def max_independent_set_size(int n, adj_list):
    """Independence number via maximum clique of the complement."""
    if n > 64:
        raise ValueError("compiled kernel supports at most 64 vertices")
    cdef uint64_t full = ((<uint64_t>1) << n) - 1 if n < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    comp = [full & ~(adj_list[v] | ((<uint64_t>1) << v)) for v in range(n)]
    return max_clique_size(n, comp)
