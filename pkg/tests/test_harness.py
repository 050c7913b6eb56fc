import json

import pytest

from perfdiv.graph import Graph, disjoint_union, join, to_graph6
from perfdiv.harness import (
    HuntConfig,
    check_stream,
    hunt,
    invariants_stream,
    read_stream,
    sample_graphs,
    verify_record,
    verify_stream,
)
from perfdiv.patterns import get_pattern

C5 = to_graph6(Graph.cycle(5))
K4 = to_graph6(Graph.complete(4))
PETERSEN = to_graph6(Graph.petersen())
FORK = to_graph6(get_pattern("fork").graph)
FORK_K1 = to_graph6(disjoint_union(get_pattern("fork").graph, Graph.empty(1)))
W5 = to_graph6(join(Graph.empty(1), Graph.cycle(5)))


def test_read_stream_numbers_lines():
    assert list(read_stream(["Bw\n", "\n", " D?? \n"])) == [(1, "Bw"), (3, "D??")]


def test_check_stream():
    report = check_stream([C5, FORK, "D!!"], ["fork", "antifork-k1"])
    a, b, c = report.records
    assert a["free"] is True and "witness" not in a
    assert b["free"] is False and b["witness"] == {"pattern": "fork", "map": [0, 1, 2, 3, 4]}
    assert c["line"] == 3 and "error" in c and "offset 1" in c["error"]
    assert report.summary == {"total": 3, "free": 1, "not_free": 1, "errors": 1, "failures": []}


def test_verify_stream():
    report = verify_stream([C5, FORK_K1, W5, K4])
    c5, fk1, w5, k4 = report.records
    assert c5["in_class"] and c5["omega"] == 2 and c5["chi"] == 3 and c5["bound"] == 3
    assert c5["division_ok"] and c5["coloring_ok"] and c5["palette_ok"] and c5["bound_ok"]
    assert fk1["in_class"] is False and fk1["witness"]["pattern"] == "fork"
    assert w5["tier_trace"] == [2] and w5["chi"] == 4
    assert k4["tier_trace"] == [1] and k4["division"] == {"A": [0, 1, 2, 3], "B": [], "omega": 4, "omegaB": 0}
    assert report.summary["failures"] == [] and report.summary["out_of_class"] == 1
    assert "elapsed" not in c5


def test_verify_empty_stream():
    report = verify_stream([])
    assert report.records == [] and report.summary["total"] == 0 and report.failures == []
    assert report.jsonl() == ""


def test_verify_isolates_errors_and_timing():
    report = verify_stream([C5, "xyz", K4])
    assert [("error" in r) for r in report.records] == [False, True, False]
    assert report.failures == [{"line": 2, "graph6": "xyz"}]
    assert report.records[0] == verify_record((1, C5))
    assert "elapsed" in verify_record((1, C5), timing=True)


def test_chi_is_opt_in_above_ten():
    big = to_graph6(Graph.cycle(11))
    rec = verify_record((1, big))
    assert rec["chi"] is None and rec["bound_ok"] is None and rec["division_ok"]
    rec = verify_record((1, big), force_chi=True)
    assert rec["chi"] == 3 and rec["bound_ok"]


def test_invariants_stream():
    report = invariants_stream([C5, K4, PETERSEN])
    c5, k4, pet = report.records
    assert (c5["omega"], c5["chi"], c5["perfect"]) == (2, 3, False)
    assert c5["certificate"]["kind"] in ("hole", "antihole")
    assert (k4["omega"], k4["chi"], k4["perfect"]) == (4, 4, True)
    assert (pet["omega"], pet["chi"], pet["perfect"]) == (2, 3, False)
    only = invariants_stream([C5], omega=True, chi=False, perfect=False).records[0]
    assert set(only) == {"line", "graph6", "n", "omega"}


def test_parallel_matches_serial():
    lines = [to_graph6(Graph.cycle(n)) for n in range(3, 10)] + ["bad!"] + [K4, W5, FORK]
    serial = verify_stream(lines, workers=1)
    parallel = verify_stream(lines, workers=3)
    assert serial.jsonl() == parallel.jsonl()
    assert serial.summary == parallel.summary


def test_sampling_is_seeded():
    cfg = HuntConfig(n_min=5, n_max=8, samples=5, seed=11)
    a = [(d, to_graph6(g)) for d, g, _ in sample_graphs(cfg)][:50]
    b = [(d, to_graph6(g)) for d, g, _ in sample_graphs(cfg)][:50]
    assert a == b
    c = [(d, to_graph6(g)) for d, g, _ in sample_graphs(HuntConfig(n_min=5, n_max=8, seed=12))][:50]
    assert a != c


def test_hunt():
    cfg = HuntConfig(n_min=6, n_max=7, samples=40, seed=1)
    report = hunt(cfg)
    assert report.summary["in_class"] == 40 and report.summary["refutations"] == 0
    assert all(r["perfectly_divisible"] for r in report.records)
    assert report.jsonl() == hunt(cfg, workers=2).jsonl()
    empty = hunt(HuntConfig(samples=0))
    assert empty.records == [] and empty.summary["draws"] == 0
    with pytest.raises(ValueError):
        hunt(HuntConfig(n_min=12, n_max=12))


def test_jsonl_is_compact_and_parseable():
    text = verify_stream([C5]).jsonl()
    assert text.endswith("\n") and ", " not in text
    assert json.loads(text)["graph6"] == C5
