"""Pure-Python maximum-clique kernel on bitmask adjacency.

The independence number of a graph is computed as the clique number of its
complement, so a single kernel serves both.  Algorithm: branch and bound with
greedy coloring upper bounds (Tomita-style).  Exact for any n that fits a
Python int; the compiled twin in ``_miscore`` handles n <= 64 faster.
"""

from __future__ import annotations


def max_clique_size(n: int, adj: list[int]) -> int:
    """Size of a maximum clique; ``adj[v]`` is the neighbor bitmask of v."""
    if n == 0:
        return 0
    best = 0

    def color_bound(cand: int) -> tuple[list[int], list[int]]:
        # Greedy coloring: vertices in one color class are pairwise
        # non-adjacent, so a clique takes at most one per class.
        order: list[int] = []
        bounds: list[int] = []
        color = 0
        uncolored = cand
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~(adj[v] | (1 << v))
                uncolored &= ~(1 << v)
                order.append(v)
                bounds.append(color)
        return order, bounds

    def expand(cand: int, size: int) -> None:
        nonlocal best
        order, bounds = color_bound(cand)
        for idx in range(len(order) - 1, -1, -1):
            if size + bounds[idx] <= best:
                return
            v = order[idx]
            if size + 1 > best:
                best = size + 1
            nxt = cand & adj[v]
            if nxt:
                expand(nxt, size + 1)
            cand &= ~(1 << v)

    expand((1 << n) - 1, 0)
    return best


def max_independent_set_size(n: int, adj: list[int]) -> int:
    """Independence number via maximum clique of the complement."""
    full = (1 << n) - 1
    comp = [full & ~(adj[v] | (1 << v)) for v in range(n)]
    return max_clique_size(n, comp)
