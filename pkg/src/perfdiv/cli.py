"""``perfdiv`` command line.

Exit codes: 0 ok, 1 failures found, 2 class violation, 3 flag misuse or a
forced tier that does not apply.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import json
import sys
from typing import Sequence

from perfdiv import kernels
from perfdiv.decomposition import ClassViolationError, PipelineFailure, TierNotApplicableError, perfect_divide
from perfdiv.divisibility import DEFAULT_MAX_N
from perfdiv.graph import from_graph6
from perfdiv.harness import HuntConfig, RunReport, check_stream, hunt, invariants_stream, verify_stream
from perfdiv.patterns import CLASS_PATTERNS, get_pattern

EXIT_OK, EXIT_FAILURES, EXIT_CLASS, EXIT_USAGE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _range(text: str, kind=int) -> tuple:
    lo, sep, hi = text.partition("-") if kind is int else text.partition(":")
    if not sep:
        return kind(lo), kind(lo)
    return kind(lo), kind(hi)


def _open_input(path: str | None):
    if path is None or path == "-":
        return contextlib.nullcontext(sys.stdin)
    return open(path, encoding="ascii", errors="replace")


def _emit(report: RunReport, as_csv: bool, out) -> None:
    if not as_csv:
        out.write(report.jsonl())
        return
    columns: list[str] = []
    for rec in report.records:
        for key in rec:
            if key not in columns:
                columns.append(key)
    writer = csv.DictWriter(out, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for rec in report.records:
        writer.writerow({k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in rec.items()})


def _summary(report: RunReport) -> None:
    print(json.dumps(report.summary, separators=(",", ":")), file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="perfdiv", description="Perfect divisions of (fork, antifork+K1)-free graphs")
    ap.add_argument("--version", action="store_true", help="print the kernel backend and exit")
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)

    def stream_args(p, csv_flag=True):
        p.add_argument("input", nargs="?", help="graph6 file, one graph per line (default: stdin)")
        p.add_argument("--workers", type=int, default=1)
        if csv_flag:
            p.add_argument("--csv", action="store_true", help="CSV instead of JSON lines")

    p = sub.add_parser("check", help="test each graph for induced patterns")
    stream_args(p)
    p.add_argument("--patterns", default=",".join(CLASS_PATTERNS), help="comma-separated catalog names")

    p = sub.add_parser("verify", help="divide and colour every class member and check the bound")
    stream_args(p)
    p.add_argument("--force-chi", action="store_true", help="compute exact chi above n=10 too")
    p.add_argument("--timing", action="store_true", help="add per-graph elapsed seconds (breaks byte-identical output)")

    p = sub.add_parser("divide", help="perfect division of a single graph")
    p.add_argument("input", nargs="?", help="file whose first line is the graph (default: stdin)")
    p.add_argument("-g", "--graph6", help="graph6 record given inline")
    p.add_argument("--tier", type=int, choices=(1, 2, 3, 4))
    p.add_argument("--trace", action="store_true")

    p = sub.add_parser("hunt", help="search random graphs for non-perfectly-divisible class members")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--n", default="7", help="vertex count or range lo-hi")
    p.add_argument("--p", default="0.2:0.8", help="edge probability or range lo:hi")
    p.add_argument("--samples", type=int, default=1000, help="in-class graphs to test")
    p.add_argument("--max-draws", type=int)
    p.add_argument("--patterns", default="fork", help="class to sample from, as forbidden patterns")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--csv", action="store_true")

    p = sub.add_parser("invariants", help="omega, chi and perfectness per graph")
    stream_args(p)
    p.add_argument("--omega", action="store_true")
    p.add_argument("--chi", action="store_true")
    p.add_argument("--perfect", action="store_true")
    p.add_argument("--force-chi", action="store_true")
    return ap


def _patterns(text: str) -> list[str]:
    names = [t for t in text.split(",") if t.strip()]
    for name in names:
        get_pattern(name)
    return names


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    out = sys.stdout
    if args.version:
        print(f"perfdiv kernels: {kernels.BACKEND}")
        return EXIT_OK
    if args.command is None:
        ap.print_help(sys.stderr)
        return EXIT_USAGE

    try:
        if args.command == "check":
            names = _patterns(args.patterns)
            with _open_input(args.input) as fh:
                report = check_stream(fh, names, args.workers)
            _emit(report, args.csv, out)
            _summary(report)
            return EXIT_OK

        if args.command == "verify":
            with _open_input(args.input) as fh:
                report = verify_stream(fh, args.workers, args.force_chi, args.timing)
            _emit(report, args.csv, out)
            _summary(report)
            return EXIT_FAILURES if report.failures else EXIT_OK

        if args.command == "invariants":
            flags = (args.omega, args.chi, args.perfect)
            if not any(flags):
                flags = (True, True, True)
            with _open_input(args.input) as fh:
                report = invariants_stream(fh, *flags, force_chi=args.force_chi, workers=args.workers)
            _emit(report, args.csv, out)
            _summary(report)
            return EXIT_OK

        if args.command == "hunt":
            n_lo, n_hi = _range(args.n)
            p_lo, p_hi = _range(args.p, float)
            config = HuntConfig(
                n_min=n_lo,
                n_max=n_hi,
                p_min=p_lo,
                p_max=p_hi,
                samples=args.samples,
                seed=args.seed,
                patterns=tuple(_patterns(args.patterns)),
                max_draws=args.max_draws,
                max_n=DEFAULT_MAX_N,
            )
            report = hunt(config, args.workers)
            _emit(report, args.csv, out)
            _summary(report)
            if report.failures:
                print(f"REFUTATION: {len(report.failures)} non-perfectly-divisible class member(s) found", file=sys.stderr)
                return EXIT_FAILURES
            return EXIT_OK

        if args.command == "divide":
            return _divide(args, out)
    except (KeyError, ValueError) as exc:
        print(f"perfdiv: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


def _divide(args, out) -> int:
    if args.graph6:
        text = args.graph6
    else:
        with _open_input(args.input) as fh:
            text = next((line.strip() for line in fh if line.strip()), "")
    g = from_graph6(text)
    try:
        result = perfect_divide(g, tier=args.tier)
    except ClassViolationError as exc:
        print(json.dumps({"graph6": text, "class_violation": exc.witness.to_json()}), file=out)
        return EXIT_CLASS
    except TierNotApplicableError as exc:
        print(f"perfdiv: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PipelineFailure as exc:
        print(json.dumps({"graph6": text, "counterexample_candidate": True, "trace": exc.trace}), file=out)
        return EXIT_FAILURES
    rec = {"graph6": text, "tier": result.tier, "division": result.division.to_json()}
    if args.trace:
        rec["trace"] = result.trace
    print(json.dumps(rec, separators=(",", ":")), file=out)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
