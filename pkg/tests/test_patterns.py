import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import adj_sets, contains_induced, lex_least_embedding
from perfdiv.graph import Graph, complement, disjoint_union, from_graph6, induced_subgraph, join
from perfdiv.patterns import (
    ANTIFORK,
    CO_CRICKET,
    Embedding,
    balloon,
    catalog,
    class_patterns,
    find_induced,
    get_pattern,
    in_class,
    is_embedding,
    is_free,
    is_homogeneous_set,
    search_order,
)
from strategies import graphs, masks

C5 = Graph.cycle(5)
W5 = join(Graph.empty(1), C5)


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _shape(name):
    g = get_pattern(name).graph
    return g.n, g.num_edges


def test_catalog_names_and_sizes():
    names = [p.name for p in catalog()]
    for required in ("claw", "fork", "antifork", "antifork-k1", "diamond", "paw", "co-dart", "bull",
                     "co-cricket", "hvn", "k5-e", "balloon-4", "balloon-5"):
        assert required in names
    assert _shape("claw") == (4, 3)
    assert _shape("fork") == (5, 4)
    assert _shape("antifork") == (5, 6)
    assert _shape("antifork-k1") == (6, 6)
    assert _shape("co-cricket") == (5, 5)
    assert _shape("diamond") == (4, 5)
    assert _shape("paw") == (4, 4)
    assert _shape("co-dart") == (5, 4)
    assert _shape("bull") == (5, 5)
    assert _shape("hvn") == (5, 8)
    assert _shape("k5-e") == (5, 9)


def test_named_graphs_match_their_definitions():
    iso = nx.is_isomorphic
    claw = nx.star_graph(3)
    fork = nx.star_graph(3)
    fork.add_edge(3, 4)
    assert iso(_nx(get_pattern("claw").graph), claw)
    assert iso(_nx(get_pattern("fork").graph), fork)
    assert iso(_nx(get_pattern("antifork").graph), nx.complement(fork))
    k4e = nx.complete_graph(4)
    k4e.remove_edge(2, 3)
    assert iso(_nx(get_pattern("diamond").graph), k4e)
    k5e = nx.complete_graph(5)
    k5e.remove_edge(3, 4)
    assert iso(_nx(get_pattern("k5-e").graph), k5e)
    bull = nx.Graph([(0, 1), (1, 2), (2, 0), (0, 3), (1, 4)])
    assert iso(_nx(get_pattern("bull").graph), bull)
    # HVN: a K4 plus a vertex adjacent to exactly two of its vertices
    hvn = get_pattern("hvn").graph
    k4 = [v for v in range(5) if hvn.degree(v) >= 3]
    outside = [v for v in range(5) if v not in k4]
    assert len(outside) == 1 and hvn.degree(outside[0]) == 2
    # the antifork is a diamond with a pendant vertex
    pendant = [v for v in range(5) if ANTIFORK.degree(v) == 1]
    assert len(pendant) == 1
    rest, _ = induced_subgraph(ANTIFORK, [v for v in range(5) if v not in pendant])
    assert iso(_nx(rest), k4e)


def test_labelings_are_search_order():
    for p in catalog():
        assert search_order(p.graph) == list(range(p.graph.n)), p.name


def test_get_pattern_errors():
    with pytest.raises(KeyError):
        get_pattern("pentagon")
    with pytest.raises(ValueError):
        get_pattern("balloon-3")
    assert get_pattern(" Fork ").name == "fork"


def test_balloon():
    b4 = balloon(4)
    # hole of length 4, claw centre on two consecutive hole vertices, plus a third leaf
    assert (b4.n, b4.num_edges) == (6, 7)
    for i in range(4, 9):
        b = balloon(i)
        assert (b.n, b.num_edges) == (i + 2, i + 3)
        adj = adj_sets(b)
        hole = [c for c in nx.simple_cycles(_nx(b).to_directed()) if len(c) == i]
        assert hole, i
        # exactly one induced i-cycle, and it passes through the two attachment vertices
        induced = {frozenset(c) for c in hole if all(len(adj[v] & set(c)) == 2 for v in c)}
        assert induced == {frozenset(range(i))}
        assert b.has_edge(i, 0) and b.has_edge(i, 1) and b.has_edge(i, i + 1)
    with pytest.raises(ValueError):
        balloon(3)


def test_find_induced_examples():
    assert find_induced(C5, get_pattern("claw")) is None
    fork = get_pattern("fork")
    assert find_induced(fork.graph, fork).map == (0, 1, 2, 3, 4)
    emb = find_induced(Graph.petersen(), get_pattern("claw"))
    assert emb is not None and is_embedding(Graph.petersen(), get_pattern("claw").graph, emb.map)
    assert find_induced(CO_CRICKET, get_pattern("diamond")) is not None
    assert find_induced(Graph.complete(4), Graph.path(3)) is None
    assert find_induced(join(Graph.empty(1), Graph.path(3)), Graph.path(3)) is not None


def test_is_free_examples():
    cls = class_patterns()
    c5k1 = disjoint_union(C5, Graph.empty(1))
    assert is_free(c5k1, cls) == (True, None)
    assert is_free(W5, cls) == (True, None)
    fork = get_pattern("fork")
    ok, witness = is_free(disjoint_union(fork.graph, Graph.empty(1)), [fork])
    assert not ok and isinstance(witness, Embedding) and witness.pattern == "fork"
    assert witness.to_json() == {"pattern": "fork", "map": [0, 1, 2, 3, 4]}


def test_co_cricket_inside_antifork_k1():
    assert find_induced(get_pattern("antifork-k1").graph, get_pattern("co-cricket")) is not None


def test_homogeneous_sets():
    diamond = get_pattern("diamond").graph
    nonadj = [(u, v) for u in range(4) for v in range(u + 1, 4) if not diamond.has_edge(u, v)]
    assert is_homogeneous_set(diamond, nonadj[0])
    assert not is_homogeneous_set(diamond, [0])
    assert not is_homogeneous_set(diamond, range(4))
    assert not any(is_homogeneous_set(C5, [u, v]) for u in range(5) for v in range(u + 1, 5))


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=7), st.sampled_from(catalog(balloons=(4, 5))))
def test_embedding_is_lex_least(g, p):
    emb = find_induced(g, p)
    expected = lex_least_embedding(g, p.graph)
    assert (emb.map if emb else None) == expected


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=8), st.data())
def test_freeness_is_hereditary(g, data):
    cls = class_patterns()
    if is_free(g, cls)[0]:
        sub, _ = induced_subgraph(g, data.draw(masks(g)))
        assert is_free(sub, cls)[0]


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8), st.integers(0, 255))
def test_within_restricts_search(g, within):
    within &= g.vertices
    for p in class_patterns():
        emb = find_induced(g, p, within)
        sub, back = induced_subgraph(g, within)
        assert (emb is None) == (not contains_induced(sub, p.graph))
        if emb:
            assert all(within >> v & 1 for v in emb.map)


def test_containing_antifork_k1_implies_containing_co_cricket():
    rng = random.Random(7)
    cocricket = get_pattern("co-cricket")
    afk1 = get_pattern("antifork-k1")
    seen = 0
    for _ in range(400):
        n = rng.randint(6, 9)
        g = Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
        if find_induced(g, afk1) is not None:
            seen += 1
            assert find_induced(g, cocricket) is not None
    assert seen


def test_in_class_on_small_examples():
    assert in_class(from_graph6("Dhc"))[0]
    assert not in_class(get_pattern("fork").graph)[0]
    assert not in_class(get_pattern("antifork-k1").graph)[0]
    assert in_class(get_pattern("antifork").graph)[0]
    assert in_class(complement(Graph.cycle(7)))[0]
