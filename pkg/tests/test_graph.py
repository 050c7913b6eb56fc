import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import decode_graph6, edge_set, load_g6
from strategies import graphs, masks
from perfdiv.graph import (
    Graph,
    GraphFormatError,
    UnsupportedSizeError,
    anti_neighborhood,
    complement,
    disjoint_union,
    from_graph6,
    induced_subgraph,
    is_anticomplete_to,
    is_clique,
    is_complete_to,
    is_stable,
    join,
    lift,
    members,
    neighbors,
    set_neighborhood,
    to_graph6,
    vset,
)
from perfdiv.patterns import ANTIFORK, CO_CRICKET, CO_DART, DIAMOND, FORK, PAW


C5 = Graph.cycle(5)


def _iso(g, h):
    return nx.is_isomorphic(nx.Graph(g.edges()), nx.Graph(h.edges())) and g.n == h.n


def test_graph6_examples():
    assert from_graph6("Bw") == Graph.complete(3)
    assert from_graph6("D??") == Graph.empty(5)
    assert from_graph6("Dhc") == C5
    assert to_graph6(Graph.complete(3)) == "Bw"
    assert to_graph6(Graph.empty(5)) == "D??"
    assert to_graph6(Graph.empty(1)) == "@"
    assert to_graph6(Graph.empty(0)) == "?"


def test_graph6_matches_independent_decoders():
    for text in load_g6("graphs_upto8.g6", max_n=7)[::7]:
        g = from_graph6(text)
        n, edges = decode_graph6(text)
        assert g.n == n and edge_set(g) == edges
        ref = nx.from_graph6_bytes(text.encode())
        assert {frozenset(e) for e in ref.edges()} == edges


def test_graph6_header_and_bytes():
    assert from_graph6(">>graph6<<Bw") == Graph.complete(3)
    assert from_graph6(b"Dhc\n") == C5


@pytest.mark.parametrize(
    "text, offset",
    [
        ("", 0),
        ("D?", 2),  # truncated: needs 2 payload bytes
        ("Dh c", 2),
        ("B\x7fw", 1),
        ("Bww", 2),  # trailing byte
        ("Bx", 1),  # nonzero padding in the only payload byte
    ],
)
def test_graph6_errors_carry_offsets(text, offset):
    with pytest.raises(GraphFormatError) as info:
        from_graph6(text)
    assert info.value.offset == offset
    assert "byte offset" in str(info.value)


def test_graph6_size_limits():
    with pytest.raises(UnsupportedSizeError):
        from_graph6("~??~")
    with pytest.raises(UnsupportedSizeError):
        to_graph6(Graph(63, (0,) * 63))
    assert from_graph6(to_graph6(Graph.cycle(62))) == Graph.cycle(62)


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (0b1,))  # loop
    with pytest.raises(IndexError):
        Graph.from_edges(3, [(0, 3)])


@settings(max_examples=200)
@given(graphs(max_n=62))
def test_graph6_round_trip(g):
    assert from_graph6(to_graph6(g)) == g


@settings(max_examples=200)
@given(graphs(), st.data())
def test_partition_law(g, data):
    X = data.draw(masks(g))
    N = set_neighborhood(g, X)
    M = anti_neighborhood(g, X)
    assert X & N == 0 and X & M == 0 and N & M == 0
    assert X | N | M == g.vertices


@given(graphs(), graphs())
def test_complement_laws(g, h):
    assert complement(complement(g)) == g
    assert complement(disjoint_union(g, h)) == join(complement(g), complement(h))


@given(graphs())
def test_degree_sum(g):
    assert sum(len(members(neighbors(g, v))) for v in range(g.n)) == 2 * g.num_edges


def test_operation_examples():
    assert complement(Graph.complete(3)) == Graph.empty(3)
    assert complement(C5).edges() != C5.edges()
    assert sorted(d for d in map(complement(C5).degree, range(5))) == [2] * 5
    assert _iso(complement(FORK), ANTIFORK)
    assert disjoint_union(DIAMOND, Graph.empty(1)) == CO_CRICKET
    assert disjoint_union(PAW, Graph.empty(1)) == CO_DART
    assert disjoint_union(C5, Graph.empty(0)) == C5
    assert join(Graph.empty(1), Graph.path(3)) == DIAMOND
    w5 = join(Graph.empty(1), C5)
    assert w5.degree(0) == 5 and w5.num_edges == 10
    assert join(Graph.empty(0), C5) == C5


def test_neighbourhoods():
    assert members(neighbors(C5, 0)) == (1, 4)
    assert members(neighbors(Graph.complete(4), 2)) == (0, 1, 3)
    assert neighbors(Graph.empty(3), 1) == 0
    with pytest.raises(IndexError):
        neighbors(C5, 5)
    assert members(set_neighborhood(C5, [0])) == (1, 4)
    assert set_neighborhood(C5, C5.vertices) == 0
    assert members(set_neighborhood(Graph.path(5), [1, 2])) == (0, 3)
    assert members(anti_neighborhood(C5, [0])) == (2, 3)
    assert anti_neighborhood(Graph.complete(6), [4]) == 0
    c5k1 = disjoint_union(C5, Graph.empty(1))
    assert members(anti_neighborhood(c5k1, [5])) == (0, 1, 2, 3, 4)
    with pytest.raises(IndexError):
        set_neighborhood(C5, 1 << 7)


def test_induced_subgraph():
    p4, back = induced_subgraph(C5, [0, 1, 2, 3])
    assert p4 == Graph.path(4) and back == (0, 1, 2, 3)
    two, back = induced_subgraph(DIAMOND, [1, 3])
    assert two == Graph.empty(2) and back == (1, 3)
    w5 = join(Graph.empty(1), C5)
    rim, back = induced_subgraph(w5, range(1, 6))
    assert rim == C5 and lift(0b101, back) == vset([1, 3])
    assert induced_subgraph(C5, C5.vertices)[0] == C5


@given(graphs(max_n=10), st.data())
def test_induced_subgraph_preserves_adjacency(g, data):
    S = data.draw(masks(g))
    h, back = induced_subgraph(g, S)
    for i in range(h.n):
        for j in range(h.n):
            assert h.has_edge(i, j) == g.has_edge(back[i], back[j])


def test_set_predicates():
    assert is_clique(Graph.complete(4), [0, 1, 2, 3])
    assert is_stable(C5, [0, 2])
    assert not is_stable(C5, [0, 1])
    c5k1 = disjoint_union(C5, Graph.empty(1))
    assert is_anticomplete_to(c5k1, [5], range(5))
    assert is_complete_to(DIAMOND, [0], [1, 2, 3])
    with pytest.raises(ValueError):
        is_complete_to(C5, [0, 1], [1, 2])
    with pytest.raises(ValueError):
        is_anticomplete_to(C5, [0], [0])
