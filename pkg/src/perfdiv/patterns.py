"""Named small graphs and induced-subgraph containment.

Catalog labelings are frozen.  Each is chosen so that index order is already
the greedy connected search order (every vertex after the first component root
has an earlier neighbour, isolated vertices last), which makes the returned
embedding the lexicographically least host tuple.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from perfdiv import kernels
from perfdiv.graph import Graph, VertexSet, disjoint_union, join, popcount, vset


@dataclass(frozen=True)
class Pattern:
    name: str
    graph: Graph


@dataclass(frozen=True)
class Embedding:
    """Induced embedding: ``map[p]`` is the host vertex of pattern vertex ``p``."""

    pattern: str
    map: tuple[int, ...]

    def to_json(self) -> dict:
        return {"pattern": self.pattern, "map": list(self.map)}


def _g(n: int, edges: str) -> Graph:
    return Graph.from_edges(n, [(int(e[0]), int(e[1])) for e in edges.split()])


CLAW = _g(4, "01 02 03")
# centre 0, leaves 1 and 2, subdivided edge 0-3-4
FORK = _g(5, "01 02 03 34")
# diamond on 0..3 with 0,1 of degree 3, pendant 4 attached to degree-2 vertex 2
ANTIFORK = _g(5, "01 02 03 12 13 24")
DIAMOND = join(Graph.empty(1), Graph.path(3))
PAW = _g(4, "01 02 12 03")
BULL = _g(5, "01 02 12 13 24")
HVN = _g(5, "01 02 03 12 13 23 40 41")
K5_MINUS_E = _g(5, "01 02 03 04 12 13 14 23 24")

ANTIFORK_K1 = disjoint_union(ANTIFORK, Graph.empty(1))
CO_DART = disjoint_union(PAW, Graph.empty(1))
CO_CRICKET = disjoint_union(DIAMOND, Graph.empty(1))


def balloon(i: int) -> Graph:
    """Hole ``0..i-1`` plus a claw centre ``i`` on vertices 0 and 1 and its third leaf ``i+1``."""
    if i < 4:
        raise ValueError(f"a balloon needs a hole of length at least 4, got {i}")
    edges = [(j, (j + 1) % i) for j in range(i)] + [(i, 0), (i, 1), (i, i + 1)]
    return Graph.from_edges(i + 2, edges)


_FIXED = {
    "claw": CLAW,
    "fork": FORK,
    "antifork": ANTIFORK,
    "antifork-k1": ANTIFORK_K1,
    "diamond": DIAMOND,
    "paw": PAW,
    "co-dart": CO_DART,
    "bull": BULL,
    "co-cricket": CO_CRICKET,
    "hvn": HVN,
    "k5-e": K5_MINUS_E,
}

CLASS_PATTERNS = ("fork", "antifork-k1")


def catalog(balloons: Iterable[int] = (4, 5, 6, 7)) -> list[Pattern]:
    out = [Pattern(name, g) for name, g in _FIXED.items()]
    out.extend(Pattern(f"balloon-{i}", balloon(i)) for i in balloons)
    return out


def get_pattern(name: str) -> Pattern:
    key = name.strip().lower()
    if key in _FIXED:
        return Pattern(key, _FIXED[key])
    m = re.fullmatch(r"balloon-(\d+)", key)
    if m:
        return Pattern(key, balloon(int(m.group(1))))
    raise KeyError(f"unknown pattern {name!r}; known: {', '.join(_FIXED)}, balloon-<i>")


def class_patterns() -> list[Pattern]:
    return [get_pattern(name) for name in CLASS_PATTERNS]


def search_order(p: Graph) -> list[int]:
    """Greedy connected order: least unvisited neighbour of the visited set first, isolated vertices last."""
    isolated = [v for v in range(p.n) if p.adj[v] == 0]
    rest = [v for v in range(p.n) if p.adj[v]]
    order: list[int] = []
    seen = 0
    while len(order) < len(rest):
        frontier = [v for v in rest if not seen >> v & 1 and p.adj[v] & seen]
        v = frontier[0] if frontier else next(v for v in rest if not seen >> v & 1)
        order.append(v)
        seen |= 1 << v
    return order + isolated


def find_induced(g: Graph, p: Pattern | Graph, within: VertexSet | None = None) -> Embedding | None:
    if isinstance(p, Graph):
        p = Pattern("anonymous", p)
    pg = p.graph
    order = search_order(pg)
    pos = {v: i for i, v in enumerate(order)}
    padj = [vset(pos[u] for u in range(pg.n) if pg.adj[v] >> u & 1) for v in order]
    pdeg = [popcount(pg.adj[v]) for v in order]
    mask = g.vertices if within is None else within
    image = kernels.induced_embedding(g.adj, mask, padj, pdeg)
    if image is None:
        return None
    out = [0] * pg.n
    for i, v in enumerate(order):
        out[v] = image[i]
    return Embedding(p.name, tuple(out))


def is_embedding(g: Graph, p: Graph, mapping: Sequence[int]) -> bool:
    if len(mapping) != p.n or len(set(mapping)) != p.n:
        return False
    return all(
        p.has_edge(a, b) == g.has_edge(mapping[a], mapping[b]) for a in range(p.n) for b in range(a + 1, p.n)
    )


def is_free(g: Graph, patterns: Sequence[Pattern]) -> tuple[bool, Embedding | None]:
    """``(True, None)`` if ``g`` contains none of ``patterns``, else ``(False, first witness)``."""
    for p in patterns:
        emb = find_induced(g, p)
        if emb is not None:
            return False, emb
    return True, None


def in_class(g: Graph) -> tuple[bool, Embedding | None]:
    """Membership in the (fork, antifork+K1)-free class."""
    return is_free(g, class_patterns())


def is_homogeneous_set(g: Graph, X: Iterable[int] | VertexSet) -> bool:
    X = vset(X)
    if not 1 < popcount(X) < g.n:
        return False
    for v in range(g.n):
        if X >> v & 1:
            continue
        hit = g.adj[v] & X
        if hit and hit != X:
            return False
    return True

