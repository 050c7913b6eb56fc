"""Batch engine behind the ``perfdiv`` command line.

Every input line is an independent work unit producing one JSON-able record;
records are returned in input order whatever the worker count, and a failing
line never affects another.
"""

from __future__ import annotations

import json
import multiprocessing
import random
import time
from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Iterable, Iterator, Sequence

from perfdiv.decomposition import binomial_bound, color_via_divisions, perfect_divide
from perfdiv.divisibility import DEFAULT_MAX_N, is_perfectly_divisible, verify_division
from perfdiv.graph import Graph, from_graph6, induced_subgraph, members, to_graph6
from perfdiv.patterns import Pattern, get_pattern, in_class, is_free
from perfdiv.perfection import chromatic_number, clique_number, is_perfect

CHI_DEFAULT_LIMIT = 10


def read_stream(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, record)`` for every nonblank line, numbering from 1."""
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if text:
            yield lineno, text


def _error(lineno: int, text: str, exc: Exception) -> dict:
    return {"line": lineno, "graph6": text, "error": f"{type(exc).__name__}: {exc}"}


# -- per-record work ----------------------------------------------------------


def check_record(item: tuple[int, str], patterns: Sequence[str]) -> dict:
    lineno, text = item
    try:
        g = from_graph6(text)
        free, witness = is_free(g, [get_pattern(p) for p in patterns])
    except Exception as exc:  # isolate the line
        return _error(lineno, text, exc)
    rec = {"line": lineno, "graph6": text, "n": g.n, "free": free}
    if witness is not None:
        rec["witness"] = witness.to_json()
    return rec


def verify_record(item: tuple[int, str], force_chi: bool = False, timing: bool = False) -> dict:
    lineno, text = item
    start = time.perf_counter()
    try:
        g = from_graph6(text)
        ok, witness = in_class(g)
        rec: dict = {"line": lineno, "graph6": text, "n": g.n, "in_class": ok}
        if not ok:
            rec["witness"] = witness.to_json()
        else:
            omega = clique_number(g)
            rec["omega"] = omega
            result = perfect_divide(g, check_class=False)
            check = verify_division(g, result.division.A, result.division.B)
            rec["tier_trace"] = [e["tier"] for e in result.trace]
            rec["division"] = result.division.to_json()
            rec["division_ok"] = check.ok
            bound = binomial_bound(omega)
            rec["bound"] = bound
            layered = color_via_divisions(g, check_class=False)
            rec["colors_used"] = layered.coloring.count
            rec["coloring_ok"] = layered.coloring.is_proper(g) and -1 not in layered.coloring.colors
            rec["palette_ok"] = layered.palette <= bound
            if g.n <= CHI_DEFAULT_LIMIT or force_chi:
                chi = chromatic_number(g)
                rec["chi"] = chi
                rec["bound_ok"] = chi <= bound
            else:
                rec["chi"] = None
                rec["bound_ok"] = None
    except Exception as exc:
        return _error(lineno, text, exc)
    if timing:
        rec["elapsed"] = round(time.perf_counter() - start, 6)
    return rec


def record_failed(rec: dict) -> bool:
    if "error" in rec:
        return True
    if not rec.get("in_class"):
        return False
    return not (
        rec["division_ok"] and rec["coloring_ok"] and rec["palette_ok"] and rec["bound_ok"] is not False
    )


def invariants_record(item: tuple[int, str], omega: bool, chi: bool, perfect: bool, force_chi: bool = False) -> dict:
    lineno, text = item
    try:
        g = from_graph6(text)
        rec: dict = {"line": lineno, "graph6": text, "n": g.n}
        if omega:
            rec["omega"] = clique_number(g)
        if chi:
            rec["chi"] = chromatic_number(g) if g.n <= CHI_DEFAULT_LIMIT or force_chi else None
        if perfect:
            ok, cert = is_perfect(g)
            rec["perfect"] = ok
            if cert is not None:
                rec["certificate"] = cert.to_json()
    except Exception as exc:
        return _error(lineno, text, exc)
    return rec


# -- campaigns ----------------------------------------------------------------


def run_records(func: Callable[[tuple[int, str]], dict], items: Iterable[tuple[int, str]], workers: int = 1) -> list[dict]:
    items = list(items)
    if workers <= 1 or len(items) < 2:
        return [func(item) for item in items]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(workers) as pool:
        out = pool.map(func, items, chunksize=max(1, len(items) // (workers * 8)))
    return sorted(out, key=lambda r: r["line"])


@dataclass
class RunReport:
    records: list[dict]
    summary: dict = field(default_factory=dict)

    @property
    def failures(self) -> list[dict]:
        return self.summary.get("failures", [])

    def jsonl(self) -> str:
        return "".join(json.dumps(r, separators=(",", ":")) + "\n" for r in self.records)


def verify_stream(lines: Iterable[str], workers: int = 1, force_chi: bool = False, timing: bool = False) -> RunReport:
    records = run_records(partial(verify_record, force_chi=force_chi, timing=timing), read_stream(lines), workers)
    failures = [{"line": r["line"], "graph6": r["graph6"]} for r in records if record_failed(r)]
    summary = {
        "total": len(records),
        "in_class": sum(1 for r in records if r.get("in_class")),
        "out_of_class": sum(1 for r in records if r.get("in_class") is False),
        "errors": sum(1 for r in records if "error" in r),
        "chi_checked": sum(1 for r in records if r.get("chi") is not None),
        "failures": failures,
    }
    return RunReport(records, summary)


def check_stream(lines: Iterable[str], patterns: Sequence[str], workers: int = 1) -> RunReport:
    records = run_records(partial(check_record, patterns=tuple(patterns)), read_stream(lines), workers)
    summary = {
        "total": len(records),
        "free": sum(1 for r in records if r.get("free")),
        "not_free": sum(1 for r in records if r.get("free") is False),
        "errors": sum(1 for r in records if "error" in r),
        "failures": [],
    }
    return RunReport(records, summary)


def invariants_stream(lines, omega=True, chi=True, perfect=True, force_chi=False, workers: int = 1) -> RunReport:
    func = partial(invariants_record, omega=omega, chi=chi, perfect=perfect, force_chi=force_chi)
    records = run_records(func, read_stream(lines), workers)
    summary = {"total": len(records), "errors": sum(1 for r in records if "error" in r), "failures": []}
    return RunReport(records, summary)


# -- hunting ------------------------------------------------------------------


@dataclass(frozen=True)
class HuntConfig:
    n_min: int = 7
    n_max: int = 7
    p_min: float = 0.2
    p_max: float = 0.8
    samples: int = 1000  # in-class samples to test
    seed: int = 1
    patterns: tuple[str, ...] = ("fork",)
    max_draws: int | None = None
    max_n: int = DEFAULT_MAX_N

    def draws_cap(self) -> int:
        return self.max_draws if self.max_draws is not None else max(100, 100 * self.samples)


def sample_graphs(config: HuntConfig) -> Iterator[tuple[int, Graph, float]]:
    """Erdos-Renyi draws; the seed alone fixes the sequence."""
    rng = random.Random(config.seed)
    for draw in range(config.draws_cap()):
        n = rng.randint(config.n_min, config.n_max)
        p = rng.uniform(config.p_min, config.p_max)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        yield draw, Graph.from_edges(n, edges), p


def hunt_record(item: tuple[int, str], max_n: int) -> dict:
    draw, text = item
    g = from_graph6(text)
    ok, bad = is_perfectly_divisible(g, max_n)
    rec: dict = {"line": draw, "graph6": text, "n": g.n, "perfectly_divisible": ok}
    if not ok:
        sub, back = induced_subgraph(g, bad)
        rec["refutation"] = {"vertices": list(members(bad)), "graph6": to_graph6(sub), "labels": list(back)}
    return rec


def hunt(config: HuntConfig, workers: int = 1) -> RunReport:
    if not config.n_min <= config.n_max <= config.max_n:
        raise ValueError(f"n range {config.n_min}-{config.n_max} exceeds the exhaustive bound {config.max_n}")
    patterns: list[Pattern] = [get_pattern(p) for p in config.patterns]
    selected: list[tuple[int, str]] = []
    draws = 0
    if config.samples > 0:
        for draw, g, _p in sample_graphs(config):
            draws += 1
            if is_free(g, patterns)[0]:
                selected.append((draw, to_graph6(g)))
                if len(selected) >= config.samples:
                    break
    records = run_records(partial(hunt_record, max_n=config.max_n), selected, workers)
    refutations = [r for r in records if not r["perfectly_divisible"]]
    summary = {
        "draws": draws,
        "in_class": len(records),
        "refutations": len(refutations),
        "failures": [{"draw": r["line"], "graph6": r["graph6"], **r["refutation"]} for r in refutations],
    }
    return RunReport(records, summary)
