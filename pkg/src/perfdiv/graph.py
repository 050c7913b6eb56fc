"""Immutable simple graphs on vertices ``0..n-1`` with bitmask vertex sets.

Every vertex set in this package is a plain ``int`` used as a bitmask: bit
``v`` is set iff vertex ``v`` is a member.  ``vset`` and ``members`` convert
between masks and ordinary iterables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 62

VertexSet = int


class GraphFormatError(ValueError):
    """Raised for malformed graph6 input."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class UnsupportedSizeError(ValueError):
    pass


def vset(vertices: Iterable[int] | int) -> VertexSet:
    """Return the bitmask of ``vertices``; an ``int`` is taken to be a mask already."""
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def iter_bits(mask: VertexSet) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """A finite simple graph.

    ``adj[v]`` is the neighbourhood mask of ``v``.  Use the classmethods to
    build graphs; the constructor validates symmetry and irreflexivity.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if self.n > MAX_VERTICES:
            raise UnsupportedSizeError(f"at most {MAX_VERTICES} vertices are supported, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise IndexError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def petersen(cls) -> Graph:
        outer = [(i, (i + 1) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        return cls.from_edges(10, outer + spokes + inner)

    # -- queries ------------------------------------------------------------

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(popcount(row) for row in self.adj) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, graph6={to_graph6(self)!r})"


# -- graph6 -----------------------------------------------------------------


def from_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 record (short form, ``n <= 62``)."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    text = text.strip("\r\n")
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
        base = len(">>graph6<<")
    else:
        base = 0
    if not text:
        raise GraphFormatError("empty graph6 record", base)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"character {ch!r} outside the graph6 range 63..126", base + i)
    if text[0] == "~":
        raise UnsupportedSizeError(f"long-form graph6 header at byte offset {base}: only n <= {MAX_VERTICES} is supported")
    n = ord(text[0]) - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    payload = text[1:]
    if len(payload) < need:
        raise GraphFormatError(f"truncated payload: expected {need} data bytes for n={n}, got {len(payload)}", base + len(text))
    if len(payload) > need:
        raise GraphFormatError(f"trailing data after {need} payload bytes", base + 1 + need)
    rows = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = ord(payload[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    if need and nbits % 6:
        pad = (ord(payload[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise GraphFormatError("nonzero padding bits", base + need)
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    if g.n > MAX_VERTICES:
        raise UnsupportedSizeError(f"graph6 short form supports n <= {MAX_VERTICES}")
    out = [chr(63 + g.n)]
    acc = 0
    k = 0
    for v in range(1, g.n):
        for u in range(v):
            acc = acc << 1 | (g.adj[u] >> v & 1)
            k += 1
            if k == 6:
                out.append(chr(63 + acc))
                acc = k = 0
    if k:
        out.append(chr(63 + (acc << (6 - k))))
    return "".join(out)


# -- operations -------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.vertices
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, g.adj + tuple(row << shift for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    shift = g.n
    gmask = g.vertices
    hmask = h.vertices << shift
    rows = tuple(row | hmask for row in g.adj) + tuple(row << shift | gmask for row in h.adj)
    return Graph(g.n + h.n, rows)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")


def _check_set(g: Graph, mask: VertexSet) -> VertexSet:
    if mask < 0 or mask >> g.n:
        raise IndexError(f"vertex set {members(mask) if mask >= 0 else mask} not contained in 0..{g.n - 1}")
    return mask


def neighbors(g: Graph, v: int) -> VertexSet:
    _check_vertex(g, v)
    return g.adj[v]


def set_neighborhood(g: Graph, X: Iterable[int] | VertexSet) -> VertexSet:
    X = _check_set(g, vset(X))
    out = 0
    for v in iter_bits(X):
        out |= g.adj[v]
    return out & ~X


def anti_neighborhood(g: Graph, X: Iterable[int] | VertexSet) -> VertexSet:
    X = _check_set(g, vset(X))
    return g.vertices & ~X & ~set_neighborhood(g, X)


def induced_subgraph(g: Graph, S: Iterable[int] | VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """Return ``(g[S], back)`` where ``back[i]`` is the vertex of ``g`` labelled ``i``."""
    S = _check_set(g, vset(S))
    back = members(S)
    index = {v: i for i, v in enumerate(back)}
    rows = []
    for v in back:
        row = 0
        for u in iter_bits(g.adj[v] & S):
            row |= 1 << index[u]
        rows.append(row)
    return Graph(len(back), tuple(rows)), back


def lift(mask: VertexSet, back: Sequence[int]) -> VertexSet:
    """Map a vertex set of an induced subgraph back to the parent's labels."""
    out = 0
    for i in iter_bits(mask):
        out |= 1 << back[i]
    return out


def is_clique(g: Graph, S: Iterable[int] | VertexSet) -> bool:
    S = _check_set(g, vset(S))
    return all(S & ~(1 << v) & ~g.adj[v] == 0 for v in iter_bits(S))


def is_stable(g: Graph, S: Iterable[int] | VertexSet) -> bool:
    S = _check_set(g, vset(S))
    return all(g.adj[v] & S == 0 for v in iter_bits(S))


def _pair(g: Graph, X, Y) -> tuple[int, int]:
    X = _check_set(g, vset(X))
    Y = _check_set(g, vset(Y))
    if X & Y:
        raise ValueError(f"sets overlap in {members(X & Y)}")
    return X, Y


def is_complete_to(g: Graph, X, Y) -> bool:
    X, Y = _pair(g, X, Y)
    return all(Y & ~g.adj[v] == 0 for v in iter_bits(X))


def is_anticomplete_to(g: Graph, X, Y) -> bool:
    X, Y = _pair(g, X, Y)
    return all(g.adj[v] & Y == 0 for v in iter_bits(X))
