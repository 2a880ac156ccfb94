"""Confusability graphs, exact independence numbers, strong products and
one-shot zero-error capacity.

The independence-number solver prefers the compiled bitset kernel when the
extension built; otherwise a pure-Python twin with the identical algorithm is
used.  A subset-enumeration brute force is kept as an independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .channels import Channel
from .numeric import is_positive

try:
    from . import _miscore as _mis_kernel

    KERNEL = "compiled"
except ImportError:  # pragma: no cover - depends on build environment
    from . import _mispure as _mis_kernel

    KERNEL = "pure"

#: exact-solver vertex limit (branch and bound)
DEFAULT_VERTEX_LIMIT = 40
#: brute force is unconditional up to this many vertices
BRUTE_FORCE_LIMIT = 24


@dataclass(frozen=True)
class ConfusabilityGraph:
    """Undirected graph on channel inputs with bitset adjacency rows."""

    vertex_count: int
    adjacency: tuple[int, ...]  # adjacency[v] = bitmask of neighbors
    labels: Optional[tuple] = None  # vertex labels carried from the input space

    def __post_init__(self):
        if len(self.adjacency) != self.vertex_count:
            raise ValueError("adjacency length mismatch")
        for v, row in enumerate(self.adjacency):
            if row >> self.vertex_count:
                raise ValueError("adjacency bits beyond vertex range")
            if row & (1 << v):
                raise ValueError(f"self-loop at vertex {v}")
            for u in range(self.vertex_count):
                if (row >> u) & 1 and not (self.adjacency[u] >> v) & 1:
                    raise ValueError("adjacency not symmetric")

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adjacency[u] >> v) & 1)

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def is_complete(self) -> bool:
        n = self.vertex_count
        return self.edge_count() == n * (n - 1) // 2


def graph_from_edges(n: int, edges: Sequence[tuple[int, int]], labels=None) -> ConfusabilityGraph:
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError("self-loops not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return ConfusabilityGraph(n, tuple(adj), labels)


def complete_graph(n: int) -> ConfusabilityGraph:
    full = (1 << n) - 1
    return ConfusabilityGraph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> ConfusabilityGraph:
    return graph_from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def confusability_graph(c: Channel) -> ConfusabilityGraph:
    """Edge between two inputs iff some output is positively probable under
    both (float entries below 1e-12 count as zero)."""
    n = c.n_inputs
    supports = [0] * n
    for i in range(n):
        mask = 0
        for o, v in enumerate(c.matrix[i]):
            if is_positive(v, c.mode):
                mask |= 1 << o
        supports[i] = mask
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if supports[u] & supports[v]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    labels = tuple(c.input_space.labels())
    return ConfusabilityGraph(n, tuple(adj), labels)


def independence_number(g: ConfusabilityGraph, limit: int = DEFAULT_VERTEX_LIMIT) -> int:
    """Exact independence number via branch and bound with coloring bounds."""
    if g.vertex_count > limit:
        raise ValueError(f"graph has {g.vertex_count} vertices, limit is {limit}")
    return _mis_kernel.max_independent_set_size(g.vertex_count, list(g.adjacency))


def independence_number_bruteforce(g: ConfusabilityGraph) -> int:
    """Subset-enumeration oracle, unconditional for <= 24 vertices."""
    n = g.vertex_count
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices")
    adj = g.adjacency
    best = 0
    for mask in range(1 << n):
        size = mask.bit_count()
        if size <= best:
            continue
        m = mask
        ok = True
        while m:
            v = (m & -m).bit_length() - 1
            if adj[v] & mask:
                ok = False
                break
            m &= m - 1
        if ok:
            best = size
    return best


def strong_product(g1: ConfusabilityGraph, g2: ConfusabilityGraph) -> ConfusabilityGraph:
    """(u1,u2) ~ (v1,v2) iff both coordinates are equal-or-adjacent and the
    pairs differ.  Pair (i, j) maps to vertex i * n2 + j."""
    n1, n2 = g1.vertex_count, g2.vertex_count
    n = n1 * n2
    adj = [0] * n
    for u1 in range(n1):
        for u2 in range(n2):
            u = u1 * n2 + u2
            for v1 in range(n1):
                if v1 != u1 and not g1.has_edge(u1, v1):
                    continue
                for v2 in range(n2):
                    if v2 != u2 and not g2.has_edge(u2, v2):
                        continue
                    v = v1 * n2 + v2
                    if v != u:
                        adj[u] |= 1 << v
    labels = None
    if g1.labels is not None and g2.labels is not None:
        labels = tuple((l1, l2) for l1 in g1.labels for l2 in g2.labels)
    return ConfusabilityGraph(n, tuple(adj), labels)


def zero_error_capacity_oneshot(c: Channel, limit: int = DEFAULT_VERTEX_LIMIT):
    """One-shot zero-error capacity log2(alpha) of the confusability graph.

    Returns ``(alpha, capacity_bits, exact_bits)`` where ``exact_bits`` is the
    integer bit count when alpha is a power of two, else None.
    """
    g = confusability_graph(c)
    alpha = independence_number(g, limit)
    capacity = math.log2(alpha)
    exact_bits = alpha.bit_length() - 1 if alpha & (alpha - 1) == 0 else None
    return alpha, capacity, exact_bits


# --- export -----------------------------------------------------------------

def graph_to_dimacs(g: ConfusabilityGraph) -> str:
    lines = [f"p edge {g.vertex_count} {g.edge_count()}"]
    for u in range(g.vertex_count):
        for v in range(u + 1, g.vertex_count):
            if g.has_edge(u, v):
                lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def graph_to_json(g: ConfusabilityGraph) -> dict:
    return {
        "vertex_count": g.vertex_count,
        "labels": [list(l) if isinstance(l, tuple) else l for l in g.labels] if g.labels else None,
        "adjacency": [
            [v for v in range(g.vertex_count) if g.has_edge(u, v)] for u in range(g.vertex_count)
        ],
    }


def graph_from_json(data: dict) -> ConfusabilityGraph:
    n = data["vertex_count"]
    edges = [(u, v) for u, nbrs in enumerate(data["adjacency"]) for v in nbrs if u < v]
    labels = tuple(tuple(l) if isinstance(l, list) else l for l in data["labels"]) if data.get("labels") else None
    return graph_from_edges(n, edges, labels)
