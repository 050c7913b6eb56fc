"""Compare the compiled and pure-Python kernels on the same workloads.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--graphs 300] [--seed 5]

Each workload runs on an identical list of random graphs; the table reports
the best of ``--repeat`` wall times per backend and the speedup.
"""

from __future__ import annotations

import argparse
import importlib
import random
import time

from perfdiv import _pykernels
from perfdiv.graph import Graph
from perfdiv.patterns import get_pattern, search_order


def random_graphs(rng: random.Random, count: int, n_lo: int, n_hi: int) -> list[Graph]:
    out = []
    for _ in range(count):
        n = rng.randint(n_lo, n_hi)
        p = rng.uniform(0.2, 0.8)
        out.append(Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]))
    return out


def pattern_args(name: str):
    p = get_pattern(name).graph
    order = search_order(p)
    pos = {v: i for i, v in enumerate(order)}
    padj = [sum(1 << pos[u] for u in range(p.n) if p.adj[v] >> u & 1) for v in order]
    pdeg = [bin(p.adj[v]).count("1") for v in order]
    return padj, pdeg


def workloads(rng: random.Random, count: int):
    mid = random_graphs(rng, count, 12, 24)
    small = random_graphs(rng, max(count // 10, 5), 9, 10)
    fork = pattern_args("fork")
    afk1 = pattern_args("antifork-k1")
    return {
        "max_clique n=12..24": lambda k: [k.max_clique(g.adj, g.vertices) for g in mid],
        "maximum_cliques": lambda k: [k.maximum_cliques(g.adj, g.vertices) for g in mid],
        "odd_hole": lambda k: [k.odd_hole(g.adj, g.vertices) for g in mid],
        "color (k=omega..chi)": lambda k: [_chi(k, g) for g in mid[: count // 3]],
        "induced fork / antifork+K1": lambda k: [
            (k.induced_embedding(g.adj, g.vertices, *fork), k.induced_embedding(g.adj, g.vertices, *afk1)) for g in mid
        ],
        "first_indivisible n=9..10": lambda k: [k.first_indivisible(g.adj, g.n) for g in small],
    }


def _chi(k, g: Graph) -> int:
    c = bin(k.max_clique(g.adj, g.vertices)).count("1")
    while k.color(g.adj, g.vertices, c) is None:
        c += 1
    return c


def best_of(fn, impl, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(impl)
        times.append(time.perf_counter() - start)
    return min(times)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--graphs", type=int, default=300)
    ap.add_argument("--seed", type=int, default=5)
    args = ap.parse_args(argv)
    try:
        cy = importlib.import_module("perfdiv._kernels")
    except ImportError:
        print("compiled extension not built; run `pip install -e . --no-build-isolation` first")
        return 1
    loads = workloads(random.Random(args.seed), args.graphs)
    print(f"{'workload':32s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, fn in loads.items():
        if fn(cy) != fn(_pykernels):
            print(f"{name:32s} RESULTS DIFFER")
            return 1
        t_py = best_of(fn, _pykernels, args.repeat)
        t_cy = best_of(fn, cy, args.repeat)
        print(f"{name:32s} {t_py:10.4f} {t_cy:10.4f} {t_py / max(t_cy, 1e-9):7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
