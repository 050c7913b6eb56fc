"""Constructive perfect divisions around a shortest odd hole.

The pipeline tries, in order: the whole graph when it is perfect (tier 1),
the anti-neighbourhood divider (tier 2), the odd-hole decomposition (tier 3)
and exhaustive search (tier 4).  Tier 3 picks a vertex ``v0`` whose
anti-neighbourhood contains an odd hole ``C0``, sorts the remaining vertices
by how they attach to ``C0`` and to ``M(C0)``, checks the structural properties
the construction relies on, divides ``G[M(C0)]`` recursively and extends that
division.  Whenever a property fails the pipeline falls through to tier 4.

Cycle positions are 0-based: ``U[i]`` holds the vertices seeing exactly
``cycle[i]`` and ``cycle[i + 1 mod n]`` on the hole.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from perfdiv.divisibility import Division, DivisionCheck, divide_by_anti_nbhd, find_perfect_division, verify_division
from perfdiv.graph import (
    Graph,
    VertexSet,
    anti_neighborhood,
    induced_subgraph,
    iter_bits,
    lift,
    members,
    popcount,
    set_neighborhood,
    to_graph6,
    vset,
)
from perfdiv.patterns import Embedding, in_class
from perfdiv.perfection import (
    Coloring,
    HoleCertificate,
    all_maximum_cliques,
    clique_number,
    color_perfect,
    find_odd_hole,
    is_perfect,
    max_clique,
)

CHECK_NAMES = (
    "U-pair-trace",
    "Z-trace-shape",
    "M1a",
    "M1b",
    "M2",
    "M3",
    "M4a",
    "M4b",
    "M5",
    "M6a",
    "M6b",
    "M7",
    "M8",
    "M9",
)


class ClassViolationError(ValueError):
    def __init__(self, witness: Embedding):
        self.witness = witness
        super().__init__(f"graph contains {witness.pattern} at {list(witness.map)}")


class TierNotApplicableError(ValueError):
    pass


class PipelineFailure(RuntimeError):
    """No tier produced a division: a counterexample candidate."""

    def __init__(self, graph6: str, trace: list[dict]):
        self.graph6 = graph6
        self.trace = trace
        super().__init__(f"no perfect division found for {graph6}")


# -- decomposition ------------------------------------------------------------


@dataclass(frozen=True)
class HoleDecomposition:
    v0: int
    cycle: tuple[int, ...]
    U: tuple[VertexSet, ...]
    Z: tuple[VertexSet, ...]
    zprime: VertexSet
    mc0: VertexSet
    residual_u: VertexSet
    residual_z: VertexSet

    @property
    def length(self) -> int:
        return len(self.cycle)

    @property
    def cycle_mask(self) -> VertexSet:
        return vset(self.cycle)

    @property
    def u_all(self) -> VertexSet:
        out = self.residual_u
        for m in self.U:
            out |= m
        return out

    @property
    def z_all(self) -> VertexSet:
        out = self.residual_z
        for m in self.Z:
            out |= m
        return out

    @property
    def v_odd(self) -> VertexSet:
        # positions 0, 2, ..., n-1
        return vset(self.cycle[0::2])

    @property
    def v_even(self) -> VertexSet:
        return vset(self.cycle[1::2])

    def pair(self, i: int) -> VertexSet:
        n = self.length
        return 1 << self.cycle[i % n] | 1 << self.cycle[(i + 1) % n]

    def to_json(self) -> dict:
        return {
            "v0": self.v0,
            "hole": list(self.cycle),
            "U": [list(members(m)) for m in self.U],
            "Z": [list(members(m)) for m in self.Z],
            "Zprime": list(members(self.zprime)),
            "MC0": list(members(self.mc0)),
            "residual_U": list(members(self.residual_u)),
            "residual_Z": list(members(self.residual_z)),
        }


def choose_base(g: Graph) -> tuple[int, tuple[int, ...]] | None:
    """Least ``v0`` whose anti-neighbourhood has an odd hole, with a shortest such hole."""
    full = g.vertices
    for v in range(g.n):
        hole = find_odd_hole(g, full & ~g.adj[v] & ~(1 << v))
        if hole is not None:
            return v, hole.cycle
    return None


def _trace_positions(g: Graph, v: int, cycle: Sequence[int]) -> list[int]:
    return [i for i, c in enumerate(cycle) if g.adj[v] >> c & 1]


def _consecutive_pair(positions: list[int], n: int) -> int | None:
    """Index ``i`` with ``positions == {i, i+1 mod n}``, if any."""
    if len(positions) != 2:
        return None
    a, b = positions
    if b == a + 1:
        return a
    if a == 0 and b == n - 1:
        return n - 1
    return None


def classify_around_hole(g: Graph, v0: int, cycle: Sequence[int]) -> HoleDecomposition:
    cycle = tuple(cycle)
    cert = HoleCertificate("hole", cycle)
    m_v0 = anti_neighborhood(g, 1 << v0) if 0 <= v0 < g.n else 0
    if not 0 <= v0 < g.n or not cert.validate(g) or vset(cycle) & ~m_v0:
        raise ValueError(f"{list(cycle)} is not an odd hole inside the anti-neighbourhood of {v0}")
    n = len(cycle)
    C = vset(cycle)
    mc0 = anti_neighborhood(g, C)
    u_all = set_neighborhood(g, mc0)
    rest = set_neighborhood(g, C) & ~u_all
    U = [0] * n
    Z = [0] * n
    residual_u = residual_z = zprime = 0
    for u in iter_bits(u_all):
        i = _consecutive_pair(_trace_positions(g, u, cycle), n)
        if i is None:
            residual_u |= 1 << u
        else:
            U[i] |= 1 << u
    for z in iter_bits(rest):
        if C & ~g.adj[z] == 0:
            zprime |= 1 << z
            continue
        i = _consecutive_pair(_trace_positions(g, z, cycle), n)
        if i is None:
            residual_z |= 1 << z
        else:
            Z[i] |= 1 << z
    return HoleDecomposition(v0, cycle, tuple(U), tuple(Z), zprime, mc0, residual_u, residual_z)


# -- property checks ----------------------------------------------------------


@dataclass(frozen=True)
class CheckStatus:
    holds: bool
    witness: tuple[int, ...] = ()

    def to_json(self) -> Any:
        return "holds" if self.holds else {"fails": list(self.witness)}


@dataclass(frozen=True)
class PropertyReport:
    statuses: dict[str, CheckStatus]

    @property
    def all_hold(self) -> bool:
        return all(s.holds for s in self.statuses.values())

    def failed(self) -> list[str]:
        return [name for name, s in self.statuses.items() if not s.holds]

    def __getitem__(self, name: str) -> CheckStatus:
        return self.statuses[name]

    def to_json(self) -> dict:
        return {name: s.to_json() for name, s in self.statuses.items()}


_HOLDS = CheckStatus(True)


def _fail(*witness: int) -> CheckStatus:
    return CheckStatus(False, tuple(witness))


def _nonadjacent_pair(g: Graph, S: VertexSet) -> tuple[int, int] | None:
    for x in iter_bits(S):
        miss = S & ~g.adj[x] & ~(1 << x)
        if miss:
            return x, (miss & -miss).bit_length() - 1
    return None


def _edge_between(g: Graph, X: VertexSet, Y: VertexSet) -> tuple[int, int] | None:
    for x in iter_bits(X):
        hit = g.adj[x] & Y
        if hit:
            return x, (hit & -hit).bit_length() - 1
    return None


def _low(mask: VertexSet) -> int:
    return (mask & -mask).bit_length() - 1


def _z_shape_ok(positions: list[int], n: int) -> bool:
    k = len(positions)
    pos = set(positions)
    if k == 2:
        return _consecutive_pair(positions, n) is not None
    if k == 3:
        return any({i, (i + 1) % n, (i + 2) % n} == pos for i in range(n))
    if k == 4:
        for i in range(n):
            first = {i, (i + 1) % n}
            if first <= pos:
                second = pos - first
                if _consecutive_pair(sorted(second), n) is not None:
                    return True
    return False


def check_properties(g: Graph, d: HoleDecomposition) -> PropertyReport:
    """Evaluate every structural property of the decomposition as a finite predicate."""
    n = d.length
    mc0 = d.mc0
    u_all = d.u_all
    z_all = d.z_all
    U, Z = d.U, d.Z

    def nmc(v: int) -> VertexSet:
        return g.adj[v] & mc0

    st: dict[str, CheckStatus] = {}

    st["U-pair-trace"] = _HOLDS
    if d.residual_u:
        u = _low(d.residual_u)
        st["U-pair-trace"] = _fail(u, _low(nmc(u)))

    st["Z-trace-shape"] = _HOLDS
    for z in iter_bits(z_all):
        if not _z_shape_ok(_trace_positions(g, z, d.cycle), n):
            st["Z-trace-shape"] = _fail(z)
            break

    st["M1a"] = _fail(_low(d.residual_z)) if d.residual_z else _HOLDS

    e = _edge_between(g, z_all, mc0)
    st["M1b"] = _fail(*e) if e else _HOLDS

    pair = _nonadjacent_pair(g, d.zprime)
    e = _edge_between(g, d.zprime, u_all | z_all)
    st["M2"] = _fail(*pair) if pair else _fail(*e) if e else _HOLDS

    st["M3"] = _HOLDS
    for i in range(n):
        pair = _nonadjacent_pair(g, U[i] | Z[i])
        if pair:
            st["M3"] = _fail(*pair)
            break

    st["M4a"] = _HOLDS
    for i in range(n):
        allowed = {i, (i + 2) % n, (i - 2) % n}
        for k in range(i + 1, n):
            if k in allowed:
                continue
            e = _edge_between(g, Z[i], Z[k])
            if e:
                st["M4a"] = _fail(*e)
                break
        if not st["M4a"].holds:
            break

    st["M4b"] = _HOLDS
    for i in range(n):
        j = (i + 2) % n
        for X, Y in ((Z[i], Z[j]), (Z[j], Z[i])):
            for x in iter_bits(X):
                hit = g.adj[x] & Y
                if popcount(hit) > 1:
                    y, y2 = members(hit)[:2]
                    st["M4b"] = _fail(x, y, y2)
                    break
            if not st["M4b"].holds:
                break
        if not st["M4b"].holds:
            break

    st["M5"] = _HOLDS
    for z in iter_bits(z_all):
        for i in range(n):
            hit = g.adj[z] & U[i]
            if not hit:
                continue
            missing = (d.pair(i) | U[i]) & ~g.adj[z]
            if missing:
                st["M5"] = _fail(z, _low(hit), _low(missing))
                break
        if not st["M5"].holds:
            break

    st["M6a"] = _HOLDS
    for u in iter_bits(u_all):
        pair = _nonadjacent_pair(g, nmc(u))
        if pair:
            st["M6a"] = _fail(u, *pair)
            break

    st["M6b"] = _HOLDS
    for i in range(n):
        for j in range(i + 1, n):
            for x in iter_bits(U[i]):
                for y in iter_bits(g.adj[x] & U[j]):
                    diff = nmc(x) ^ nmc(y)
                    if diff:
                        st["M6b"] = _fail(x, y, _low(diff))
                        break
                if not st["M6b"].holds:
                    break
            if not st["M6b"].holds:
                break
        if not st["M6b"].holds:
            break

    st["M7"] = _HOLDS
    for i in range(n):
        verts = members(U[i])
        for a in range(len(verts)):
            for b in range(a + 1, len(verts)):
                common = nmc(verts[a]) & nmc(verts[b])
                if common:
                    st["M7"] = _fail(verts[a], verts[b], _low(common))
                    break
            if not st["M7"].holds:
                break
        if not st["M7"].holds:
            break

    omega = clique_number(g)
    k = max_clique(g, u_all | z_all)
    st["M8"] = _fail(*members(k)) if popcount(k) >= omega else _HOLDS

    st["M9"] = _HOLDS
    for i in range(n):
        e = _edge_between(g, U[i], U[(i + 1) % n])
        if e:
            st["M9"] = _fail(*e)
            break

    return PropertyReport({name: st[name] for name in CHECK_NAMES})


# -- selection set and extension ----------------------------------------------


@dataclass(frozen=True)
class SSelection:
    maximum_cliques: tuple[VertexSet, ...]
    S: VertexSet
    chosen: tuple[int, ...]  # chosen[i] is the vertex picked from maximum_cliques[i]
    shape_violations: tuple[tuple[int, str], ...] = ()
    consequence_failures: tuple[tuple[str, tuple[int, ...]], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.shape_violations and not self.consequence_failures

    def to_json(self) -> dict:
        return {
            "maximum_cliques": [list(members(x)) for x in self.maximum_cliques],
            "S": list(members(self.S)),
            "chosen": list(self.chosen),
            "shape_violations": [list(v) for v in self.shape_violations],
            "consequence_failures": [[name, list(w)] for name, w in self.consequence_failures],
        }


def _clique_shape_problem(g: Graph, d: HoleDecomposition, X: VertexSet) -> str | None:
    """Why ``X`` is not of the form {u_i1, ..., u_ih} + N_M(C0)(u_i1), or ``None``."""
    n = d.length
    xu = X & d.u_all
    if not xu:
        return "no vertex of U"
    if xu & d.residual_u:
        return "vertex of U outside every U_i"
    idx = []
    for i in range(n):
        c = popcount(X & d.U[i])
        if c > 1:
            return f"two vertices in U_{i}"
        if c:
            idx.append(i)
    for a in idx:
        for b in idx:
            if a != b and (b - a) % n in (1, n - 1):
                return f"consecutive indices {a} and {b}"
    first = _low(xu)
    common = g.adj[first] & d.mc0
    if any(g.adj[u] & d.mc0 != common for u in iter_bits(xu)):
        return "different neighbourhoods in M(C0)"
    if X & ~d.u_all != common:
        return "M(C0)-part differs from the common neighbourhood"
    return None


def build_S(g: Graph, d: HoleDecomposition, B0: VertexSet) -> SSelection:
    B0 = vset(B0)
    if B0 & ~d.mc0:
        raise ValueError("B0 must be a subset of M(C0)")
    u_all = d.u_all
    omega = clique_number(g)
    W = u_all | B0
    if clique_number(g, W) < omega:
        return SSelection((), 0, ())
    cliques = tuple(all_maximum_cliques(g, W))
    chosen = []
    violations = []
    S = 0
    for idx, X in enumerate(cliques):
        problem = _clique_shape_problem(g, d, X)
        if problem:
            violations.append((idx, problem))
        xu = X & u_all
        if xu:
            v = _low(xu)
            chosen.append(v)
            S |= 1 << v
        else:
            chosen.append(-1)
    failures = []
    rest = max_clique(g, B0 | (u_all & ~S))
    if popcount(rest) >= omega:
        failures.append(("omega-after-removal", members(rest)))
    A0 = d.mc0 & ~B0
    for x in iter_bits(S):
        hit = g.adj[x] & A0
        if hit:
            failures.append(("S-meets-A0", (x, _low(hit))))
            break
    return SSelection(cliques, S, tuple(chosen), tuple(violations), tuple(failures))


def extend_division(g: Graph, d: HoleDecomposition, A0: VertexSet, B0: VertexSet, s: SSelection) -> DivisionCheck:
    """Assemble ``A = A0 + V_odd + S`` and ``B = B0 + (U - S) + Z + V_even + Z'`` and verify it."""
    A0, B0 = vset(A0), vset(B0)
    if d.residual_u or d.residual_z:
        raise ValueError("decomposition has residual vertices")
    if A0 & B0 or (A0 | B0) != d.mc0:
        raise ValueError("(A0, B0) is not a partition of M(C0)")
    if not is_perfect(g, A0)[0] or (d.mc0 and clique_number(g, B0) >= clique_number(g, d.mc0)):
        raise ValueError("(A0, B0) is not a perfect division of G[M(C0)]")
    A = A0 | d.v_odd | s.S
    B = B0 | (d.u_all & ~s.S) | d.z_all | d.v_even | d.zprime
    return verify_division(g, A, B)


# -- pipeline -----------------------------------------------------------------


@dataclass
class DivideResult:
    division: Division
    trace: list[dict] = field(default_factory=list)

    @property
    def tier(self) -> int:
        return self.trace[0]["tier"]

    def to_json(self) -> dict:
        return {"division": self.division.to_json(), "trace": self.trace}


def _labels(mask: VertexSet, labels: Sequence[int]) -> list[int]:
    return sorted(labels[v] for v in iter_bits(mask))


def perfect_divide(g: Graph, tier: int | None = None, check_class: bool = True) -> DivideResult:
    """Perfect division of a (fork, antifork+K1)-free graph via the tier cascade.

    ``tier`` forces the top level to use one tier; a forced tier 3 whose checks
    fail still falls through to tier 4, as in the normal cascade.
    """
    if tier not in (None, 1, 2, 3, 4):
        raise ValueError(f"unknown tier {tier}")
    if check_class:
        ok, witness = in_class(g)
        if not ok:
            raise ClassViolationError(witness)
    trace: list[dict] = []
    division = _divide(g, tuple(range(g.n)), 0, trace, tier)
    return DivideResult(division, trace)


def _divide(g: Graph, labels: tuple[int, ...], level: int, trace: list[dict], forced: int | None = None) -> Division:
    entry: dict[str, Any] = {"level": level, "n": g.n, "tier": None}
    trace.append(entry)
    notes: list[str] = []

    def done(t: int, div: Division) -> Division:
        entry["tier"] = t
        entry["A"] = _labels(div.A, labels)
        entry["B"] = _labels(div.B, labels)
        if notes:
            entry["fallthrough"] = notes
        return div

    if forced in (None, 1):
        if g.n == 0:
            return done(1, Division(0, 0, 0, 0))
        if is_perfect(g)[0]:
            return done(1, Division.from_check(verify_division(g, g.vertices, 0)))
        if forced:
            raise TierNotApplicableError("tier 1 needs a perfect graph")
    if forced in (None, 2):
        found = divide_by_anti_nbhd(g)
        if found is not None:
            entry["v"] = labels[found[1]]
            return done(2, found[0])
        if forced:
            raise TierNotApplicableError("tier 2 needs a vertex with a perfect anti-neighbourhood")
    if forced in (None, 3):
        base = choose_base(g)
        if base is None:
            if forced:
                raise TierNotApplicableError("tier 3 needs an odd hole in some anti-neighbourhood")
            notes.append("tier 3: no odd hole in any anti-neighbourhood")
        else:
            div = _tier3(g, labels, level, trace, entry, notes, base)
            if div is not None:
                return done(3, div)
    div = find_perfect_division(g)
    if div is None:
        entry["tier"] = "none"
        entry["fallthrough"] = notes
        raise PipelineFailure(to_graph6(g), trace)
    return done(4, div)


def _tier3(g, labels, level, trace, entry, notes, base) -> Division | None:
    v0, cycle = base
    d = classify_around_hole(g, v0, cycle)
    report = check_properties(g, d)
    entry["v0"] = labels[v0]
    entry["hole"] = [labels[v] for v in cycle]
    entry["parts"] = {
        "U": [popcount(m) for m in d.U],
        "Z": [popcount(m) for m in d.Z],
        "Zprime": popcount(d.zprime),
        "MC0": popcount(d.mc0),
        "residual_U": popcount(d.residual_u),
        "residual_Z": popcount(d.residual_z),
    }
    entry["properties"] = report.to_json()
    if d.residual_u or d.residual_z or not report.all_hold:
        notes.append("tier 3: property checks failed: " + ",".join(report.failed()))
        return None
    sub, back = induced_subgraph(g, d.mc0)
    sub_div = _divide(sub, tuple(labels[v] for v in back), level + 1, trace)
    A0 = lift(sub_div.A, back)
    B0 = lift(sub_div.B, back)
    sel = build_S(g, d, B0)
    entry["S"] = _labels(sel.S, labels)
    if not sel.ok:
        notes.append(
            "tier 3: selection set failed: "
            + ",".join([p for _, p in sel.shape_violations] + [name for name, _ in sel.consequence_failures])
        )
        return None
    check = extend_division(g, d, A0, B0, sel)
    if not check.ok:
        notes.append(f"tier 3: extension failed: {check.clause}")
        return None
    return Division.from_check(check)


# -- colouring ----------------------------------------------------------------


@dataclass(frozen=True)
class LayeredColoring:
    coloring: Coloring
    palette: int  # colours reserved across all layers
    layers: tuple[tuple[VertexSet, int], ...]  # (A of each layer, omega of that layer)


def binomial_bound(omega: int) -> int:
    return omega * (omega + 1) // 2


def color_via_divisions(g: Graph, check_class: bool = True) -> LayeredColoring:
    """Colour ``g`` by peeling perfect parts: each layer's ``A`` gets a fresh palette of
    ``omega(G[A])`` colours and the process repeats on ``G[B]``.
    """
    if check_class:
        ok, witness = in_class(g)
        if not ok:
            raise ClassViolationError(witness)
    colors = [-1] * g.n
    offset = 0
    layers = []
    current = g.vertices
    while current:
        sub, back = induced_subgraph(g, current)
        div = perfect_divide(sub, check_class=False).division
        part = color_perfect(sub, div.A)
        for i, c in enumerate(part.colors):
            if c >= 0:
                colors[back[i]] = offset + c
        width = clique_number(sub, div.A)
        offset += width
        layers.append((lift(div.A, back), div.omega))
        current = lift(div.B, back)
    return LayeredColoring(Coloring(tuple(colors)), offset, tuple(layers))
