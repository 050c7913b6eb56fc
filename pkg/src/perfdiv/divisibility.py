"""Perfect divisions: verification, construction and exhaustive divisibility checks.

A perfect division of ``g`` is a partition ``(A, B)`` of its vertices with
``g[A]`` perfect and ``omega(g[B]) < omega(g)``.  The 0-vertex graph is treated
as divisible by ``(empty, empty)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from perfdiv import kernels
from perfdiv.graph import Graph, VertexSet, members, popcount, vset
from perfdiv.perfection import HoleCertificate, all_maximum_cliques, clique_number, is_perfect, max_clique

DEFAULT_MAX_N = 10


class ResourceLimitError(RuntimeError):
    pass


@dataclass(frozen=True)
class DivisionCheck:
    """Outcome of checking a candidate ``(A, B)``.

    ``clause`` names the first broken condition: ``"partition"``,
    ``"A-imperfect"`` (``certificate`` is a hole or antihole in A) or
    ``"B-omega"`` (``certificate`` is an omega-sized clique inside B).
    """

    A: VertexSet
    B: VertexSet
    ok: bool
    clause: str | None = None
    certificate: HoleCertificate | VertexSet | None = None
    omega: int = 0
    omega_b: int = 0

    def to_json(self) -> dict:
        cert = self.certificate
        if isinstance(cert, HoleCertificate):
            cert = cert.to_json()
        elif cert is not None:
            cert = list(members(cert))
        return {
            "ok": self.ok,
            "clause": self.clause,
            "certificate": cert,
            "A": list(members(self.A)),
            "B": list(members(self.B)),
            "omega": self.omega,
            "omegaB": self.omega_b,
        }


@dataclass(frozen=True)
class Division:
    """A verified perfect division; build it with :func:`verify_division` or :meth:`from_check`."""

    A: VertexSet
    B: VertexSet
    omega: int
    omega_b: int

    @classmethod
    def from_check(cls, check: DivisionCheck) -> Division:
        if not check.ok:
            raise ValueError(f"not a perfect division: {check.clause}")
        return cls(check.A, check.B, check.omega, check.omega_b)

    def to_json(self) -> dict:
        return {"A": list(members(self.A)), "B": list(members(self.B)), "omega": self.omega, "omegaB": self.omega_b}


def verify_division(g: Graph, A, B) -> DivisionCheck:
    A, B = vset(A), vset(B)
    full = g.vertices
    if A & B or (A | B) != full or (A | B) & ~full:
        bad = (A & B) | (full & ~(A | B)) | ((A | B) & ~full)
        return DivisionCheck(A, B, False, "partition", bad)
    if g.n == 0:
        return DivisionCheck(A, B, True)
    ok, cert = is_perfect(g, A)
    if not ok:
        return DivisionCheck(A, B, False, "A-imperfect", cert)
    omega = clique_number(g)
    qb = max_clique(g, B)
    if popcount(qb) >= omega:
        return DivisionCheck(A, B, False, "B-omega", qb, omega, popcount(qb))
    return DivisionCheck(A, B, True, None, None, omega, popcount(qb))


def _checked(g: Graph, A: VertexSet, B: VertexSet) -> Division:
    check = verify_division(g, A, B)
    if not check.ok:
        raise AssertionError(f"constructed division failed verification: {check.to_json()}")
    return Division.from_check(check)


def divide_by_anti_nbhd(g: Graph) -> tuple[Division, int] | None:
    """First vertex ``v`` whose anti-neighbourhood induces a perfect graph.

    Returns the division ``A = {v} + M(v)``, ``B = N(v)`` together with ``v``.
    """
    full = g.vertices
    for v in range(g.n):
        m = full & ~g.adj[v] & ~(1 << v)
        if is_perfect(g, m)[0]:
            return _checked(g, m | 1 << v, g.adj[v]), v
    return None


def find_perfect_division(g: Graph) -> Division | None:
    """Exact search: ``(V, empty)`` if perfect, then the anti-neighbourhood divider,
    then every ``B`` by increasing size (so ``A`` by decreasing size).

    Candidates with ``B`` containing a maximum clique of ``g``, or ``A``
    containing an odd hole/antihole already met, are skipped.
    """
    if g.n == 0:
        return Division(0, 0, 0, 0)
    if is_perfect(g)[0]:
        return _checked(g, g.vertices, 0)
    found = divide_by_anti_nbhd(g)
    if found is not None:
        return found[0]
    cliques = all_maximum_cliques(g)
    obstacles: list[VertexSet] = []
    full = g.vertices
    for r in range(1, g.n + 1):
        for combo in combinations(range(g.n), r):
            B = vset(combo)
            if any(q & ~B == 0 for q in cliques):
                continue
            A = full & ~B
            if any(h & ~A == 0 for h in obstacles):
                continue
            ok, cert = is_perfect(g, A)
            if ok:
                return _checked(g, A, B)
            obstacles.append(cert.vertices)
    return None


def _guard(g: Graph, max_n: int) -> None:
    if g.n > max_n:
        raise ResourceLimitError(
            f"exhaustive divisibility is limited to n <= {max_n} (got {g.n}); use hunt sampling for larger graphs"
        )


def is_perfectly_divisible(g: Graph, max_n: int = DEFAULT_MAX_N) -> tuple[bool, VertexSet | None]:
    """Whether every induced subgraph has a perfect division.

    Sweeps all vertex subsets bottom-up with memoised perfectness and clique
    numbers.  On failure returns a smallest failing vertex subset.
    """
    _guard(g, max_n)
    bad = kernels.first_indivisible(g.adj, g.n)
    return (True, None) if bad < 0 else (False, bad)


def anti_divider_everywhere(g: Graph, max_n: int = DEFAULT_MAX_N) -> tuple[bool, VertexSet | None]:
    """Whether every nonempty induced subgraph ``H`` has a vertex ``v`` with ``H[M_H(v)]`` perfect."""
    _guard(g, max_n)
    bad = kernels.first_without_anti_divider(g.adj, g.n)
    return (True, None) if bad < 0 else (False, bad)

