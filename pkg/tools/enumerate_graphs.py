#!/usr/bin/env python3
"""Write isomorphism-free graph6 streams, standing in for nauty's ``geng``.

Graphs on n vertices are grown from the graphs on n-1 vertices by adding one
vertex in every possible way and keeping one canonical representative per
isomorphism class (pynauty canonical labelling).  With ``--free`` only graphs
avoiding the named patterns are kept at every size; since such classes are
hereditary, this still yields every class member.

    python tools/enumerate_graphs.py --max-n 8 > tests/data/graphs_upto8.g6
    python tools/enumerate_graphs.py --max-n 9 --min-n 9 --free claw,antifork-k1
"""

from __future__ import annotations

import argparse
import sys

import pynauty

from perfdiv.graph import Graph, to_graph6
from perfdiv.patterns import get_pattern, is_free


def canonical(n: int, rows: list[int]) -> Graph:
    pg = pynauty.Graph(n, adjacency_dict={v: [u for u in range(n) if rows[v] >> u & 1] for v in range(n)})
    label = pynauty.canon_label(pg)  # label[i] is the vertex placed at position i
    pos = {v: i for i, v in enumerate(label)}
    out = [0] * n
    for v in range(n):
        for u in range(n):
            if rows[v] >> u & 1:
                out[pos[v]] |= 1 << pos[u]
    return Graph(n, tuple(out))


def grow(level: list[Graph], keep) -> list[Graph]:
    seen: dict[str, Graph] = {}
    for g in level:
        n = g.n
        for nbrs in range(1 << n):
            rows = [row | ((nbrs >> v & 1) << n) for v, row in enumerate(g.adj)] + [nbrs]
            h = canonical(n + 1, rows)
            key = to_graph6(h)
            if key not in seen and keep(h):
                seen[key] = h
    return [seen[k] for k in sorted(seen)]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, required=True)
    ap.add_argument("--min-n", type=int, default=0)
    ap.add_argument("--free", default="", help="comma-separated catalog pattern names to exclude hereditarily")
    args = ap.parse_args(argv)

    patterns = [get_pattern(name) for name in args.free.split(",") if name]

    def keep(g: Graph) -> bool:
        return not patterns or is_free(g, patterns)[0]

    level = [Graph.empty(0)]
    for n in range(args.max_n + 1):
        if n > 0:
            level = grow(level, keep)
        if n >= args.min_n:
            for g in level:
                sys.stdout.write(to_graph6(g) + "\n")
        print(f"n={n}: {len(level)} graphs", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
