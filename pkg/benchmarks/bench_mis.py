"""Benchmark the compiled independence-number kernel against the pure-Python
twin on random graphs and on the structured instances the package cares about.

Run:  python3 benchmarks/bench_mis.py [--trials N]
"""

import argparse
import random
import statistics
import time

from zecomm import _mispure
from zecomm.channels import make_mm, make_nm, tensor_channels
from zecomm.graphs import (
    KERNEL,
    confusability_graph,
    cycle_graph,
    graph_from_edges,
    strong_product,
)

try:
    from zecomm import _miscore
except ImportError:
    _miscore = None


def random_graph(rng, n, p):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return graph_from_edges(n, edges)


def time_kernel(kernel, graphs, repeats=3):
    best = None
    for _ in range(repeats):
        start = time.perf_counter()
        values = [kernel.max_independent_set_size(g.vertex_count, list(g.adjacency)) for g in graphs]
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, values


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=60, help="random graphs per size class")
    args = parser.parse_args()

    rng = random.Random(12345)
    suites = {
        "random n=20 p=0.5": [random_graph(rng, 20, 0.5) for _ in range(args.trials)],
        "random n=32 p=0.5": [random_graph(rng, 32, 0.5) for _ in range(args.trials)],
        "random n=40 p=0.3": [random_graph(rng, 40, 0.3) for _ in range(args.trials // 3)],
        "C5 strong C5 (25 vertices)": [strong_product(cycle_graph(5), cycle_graph(5))],
        "tensor channel graph (16 vertices)": [
            confusability_graph(tensor_channels(make_nm(2), make_nm(2)))
        ],
        "block channel m=5 (10 vertices)": [confusability_graph(make_mm(5))],
    }

    print(f"selected kernel at import: {KERNEL}")
    if _miscore is None:
        print("compiled kernel unavailable; benchmarking the pure kernel only")

    for name, graphs in suites.items():
        pure_time, pure_values = time_kernel(_mispure, graphs)
        line = f"{name:<36} pure {pure_time * 1e3:8.1f} ms"
        if _miscore is not None:
            fast_time, fast_values = time_kernel(_miscore, graphs)
            assert fast_values == pure_values, "kernel disagreement"
            line += f"   compiled {fast_time * 1e3:8.1f} ms   speedup {pure_time / fast_time:6.1f}x"
        print(line)

    if _miscore is not None:
        # sanity summary over many small graphs
        small = [random_graph(rng, rng.randint(4, 16), rng.random()) for _ in range(300)]
        _, a = time_kernel(_mispure, small, repeats=1)
        _, b = time_kernel(_miscore, small, repeats=1)
        agree = statistics.mean(x == y for x, y in zip(a, b))
        print(f"agreement on 300 random small graphs: {agree:.0%}")


if __name__ == "__main__":
    main()
