"""Perfectness via odd hole / odd antihole search, and exact clique and colouring solvers."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from perfdiv import kernels
from perfdiv.graph import Graph, VertexSet, popcount


@dataclass(frozen=True)
class HoleCertificate:
    """An induced odd cycle (``kind="hole"``) or its complement (``kind="antihole"``)."""

    kind: Literal["hole", "antihole"]
    cycle: tuple[int, ...]

    @property
    def vertices(self) -> VertexSet:
        mask = 0
        for v in self.cycle:
            mask |= 1 << v
        return mask

    def validate(self, g: Graph) -> bool:
        k = len(self.cycle)
        if k < 5 or k % 2 == 0 or len(set(self.cycle)) != k:
            return False
        want_edge = self.kind == "hole"
        for i in range(k):
            for j in range(i + 1, k):
                consecutive = j == i + 1 or (i == 0 and j == k - 1)
                if g.has_edge(self.cycle[i], self.cycle[j]) != (consecutive == want_edge):
                    return False
        return True

    def to_json(self) -> dict:
        return {"kind": self.kind, "cycle": list(self.cycle)}


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]  # -1 marks an uncoloured vertex

    @property
    def count(self) -> int:
        used = {c for c in self.colors if c >= 0}
        return len(used)

    def is_proper(self, g: Graph) -> bool:
        return all(
            self.colors[u] != self.colors[v] for u, v in g.edges() if self.colors[u] >= 0 and self.colors[v] >= 0
        )


class ImperfectGraphError(ValueError):
    def __init__(self, certificate: HoleCertificate):
        self.certificate = certificate
        super().__init__(f"graph is not perfect: odd {certificate.kind} {list(certificate.cycle)}")


def _within(g: Graph, within: VertexSet | None) -> VertexSet:
    if within is None:
        return g.vertices
    if within >> g.n:
        raise IndexError("within contains vertices outside the graph")
    return within


def _complement_rows(g: Graph, within: VertexSet) -> list[int]:
    return [(~row & within & ~(1 << v)) if within >> v & 1 else 0 for v, row in enumerate(g.adj)]


def find_odd_hole(g: Graph, within: VertexSet | None = None) -> HoleCertificate | None:
    """A shortest odd hole inside ``within``."""
    cyc = kernels.odd_hole(g.adj, _within(g, within))
    return None if cyc is None else HoleCertificate("hole", tuple(cyc))


def find_odd_antihole(g: Graph, within: VertexSet | None = None) -> HoleCertificate | None:
    """A shortest odd antihole inside ``within`` (an odd hole of the complement)."""
    w = _within(g, within)
    cyc = kernels.odd_hole(_complement_rows(g, w), w)
    return None if cyc is None else HoleCertificate("antihole", tuple(cyc))


def is_perfect(g: Graph, within: VertexSet | None = None) -> tuple[bool, HoleCertificate | None]:
    w = _within(g, within)
    if popcount(w) < 5:
        return True, None
    cert = find_odd_hole(g, w) or find_odd_antihole(g, w)
    return cert is None, cert


def max_clique(g: Graph, within: VertexSet | None = None) -> VertexSet:
    """The lexicographically least maximum clique."""
    return kernels.max_clique(g.adj, _within(g, within))


def clique_number(g: Graph, within: VertexSet | None = None) -> int:
    return popcount(max_clique(g, within))


def all_maximum_cliques(g: Graph, within: VertexSet | None = None) -> list[VertexSet]:
    return kernels.maximum_cliques(g.adj, _within(g, within))


def is_k_colorable(g: Graph, k: int, within: VertexSet | None = None) -> Coloring | None:
    colors = kernels.color(g.adj, _within(g, within), k)
    return None if colors is None else Coloring(tuple(colors))


def optimal_coloring(g: Graph, within: VertexSet | None = None) -> Coloring:
    w = _within(g, within)
    k = clique_number(g, w)
    while True:
        col = is_k_colorable(g, k, w)
        if col is not None:
            return col
        k += 1


def chromatic_number(g: Graph, within: VertexSet | None = None) -> int:
    return optimal_coloring(g, within).count


def color_perfect(g: Graph, within: VertexSet | None = None) -> Coloring:
    """Colour a perfect (sub)graph with exactly omega colours."""
    w = _within(g, within)
    ok, cert = is_perfect(g, w)
    if not ok:
        raise ImperfectGraphError(cert)
    col = is_k_colorable(g, clique_number(g, w), w)
    assert col is not None, "a perfect graph must be omega-colourable"
    return col

