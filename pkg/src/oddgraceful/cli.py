"""Command-line front end.

Subcommands: label (construct a family labeling), verify (check a labeling
file against a graph file), search (exhaustive oracle), table (feasibility
sweep), dot (render a graph file), bench (construction timing at large
sizes). Exit codes are part of the contract: label and verify exit 0 exactly
when the labeling is odd graceful, search exits 0/2/3 for found / exhausted /
budget-exceeded, and any input or parameter problem exits 64.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from ._version import __version__
from .construct import (
    BoundPolicy,
    ConstructionMethod,
    construct_labeling,
    label_closed_form,
    min_path_order,
)
from .errors import InvalidParameterError, OddGracefulError
from .graph import FamilySpec, make_union
from .io_formats import (
    build_labeling_document,
    emit_dot,
    emit_report,
    parse_edge_list,
    parse_labeling_document,
)
from .labeling import Labeling, verify_odd_graceful
from .search import SearchConfig, SearchVerdict, search_odd_graceful

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NOT_FOUND = 2
EXIT_BUDGET = 3
EXIT_USAGE = 64

BENCH_CYCLE_CAP = 40


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except OddGracefulError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddgraceful",
        description="Construct, verify, and search odd-graceful labelings.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("label", help="construct a labeling for one cycle plus one path")
    p.add_argument("--cycle", type=int, required=True, help="cycle order (even, >= 4)")
    p.add_argument("--path", type=int, required=True, help="path order (>= 2)")
    p.add_argument("--method", choices=["closed", "algo"], default="closed")
    p.add_argument("--force", action="store_true", help="construct below the minimum path order")
    _common_flags(p)
    p.set_defaults(handler=_cmd_label)

    p = sub.add_parser("verify", help="verify a labeling file against a graph file")
    p.add_argument("graph_file")
    p.add_argument("labeling_file")
    _common_flags(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("search", help="exhaustive search for an odd-graceful labeling")
    p.add_argument("graph_file")
    p.add_argument("--budget", type=int, default=None, help="backtrack-node cap")
    p.add_argument("--all", action="store_true", help="count every solution")
    p.add_argument("--no-precheck", action="store_true", help="disable the parity precheck")
    p.add_argument("--workers", type=int, default=1, help="parallel subtree workers")
    _common_flags(p)
    p.set_defaults(handler=_cmd_search)

    p = sub.add_parser("table", help="feasibility sweep around the minimum path order")
    p.add_argument("--m-max", type=int, required=True, help="largest cycle order (even, >= 4)")
    p.add_argument("--n-extra", type=int, default=0, help="rows past the minimum path order")
    _common_flags(p)
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("dot", help="render a graph file (optionally labeled) as DOT")
    p.add_argument("graph_file")
    p.add_argument("--labeling", default=None, help="labeling file to draw on the graph")
    _common_flags(p)
    p.set_defaults(handler=_cmd_dot)

    p = sub.add_parser("bench", help="time the construction at a list of edge counts")
    p.add_argument("--q-list", type=_q_list, required=True, help="comma-separated edge counts")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument(
        "--verify-limit",
        type=int,
        default=1_000_000,
        help="verify outputs up to this edge count (larger runs are timed only)",
    )
    _common_flags(p)
    p.set_defaults(handler=_cmd_bench)
    return parser


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", default=None, help="write output to a file instead of stdout")
    p.add_argument("--format", choices=["report", "dot"], default=None)


def _q_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad edge-count list {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("edge-count list is empty")
    return values


def _write(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_label(args) -> int:
    spec = FamilySpec(args.cycle, args.path)
    policy = BoundPolicy.FORCE if args.force else BoundPolicy.ENFORCE
    method = ConstructionMethod.CLOSED_FORM if args.method == "closed" else ConstructionMethod.ALGORITHMIC
    labeling = construct_labeling(spec, method, policy)
    g = make_union(spec)
    report = verify_odd_graceful(g, labeling)
    if args.format == "dot":
        _write(args, emit_dot(g, labeling))
    else:
        doc = build_labeling_document(g, labeling, report.ok, family=(args.cycle, args.path))
        _write(args, emit_report(doc))
    return EXIT_OK if report.ok else EXIT_INVALID


def _cmd_verify(args) -> int:
    graph_text = Path(args.graph_file).read_text()
    labeling_text = Path(args.labeling_file).read_text()
    g = parse_edge_list(graph_text)
    doc = parse_labeling_document(labeling_text)
    labeling = Labeling(doc.labels)
    report = verify_odd_graceful(g, labeling)
    if args.format == "dot":
        _write(args, emit_dot(g, labeling))
    else:
        _write(args, emit_report(report, source_text=graph_text + labeling_text))
    return EXIT_OK if report.ok else EXIT_INVALID


def _cmd_search(args) -> int:
    graph_text = Path(args.graph_file).read_text()
    g = parse_edge_list(graph_text)
    cfg = SearchConfig(
        node_budget=args.budget,
        find_all=args.all,
        parity_precheck=not args.no_precheck,
        workers=args.workers,
    )
    outcome = search_odd_graceful(g, cfg)
    if args.format == "dot":
        if outcome.labeling is None:
            raise InvalidParameterError("no labeling found, nothing to render as DOT")
        _write(args, emit_dot(g, outcome.labeling))
    else:
        _write(args, emit_report(outcome, source_text=graph_text))
    return {
        SearchVerdict.FOUND: EXIT_OK,
        SearchVerdict.EXHAUSTED_NOT_FOUND: EXIT_NOT_FOUND,
        SearchVerdict.BUDGET_EXCEEDED: EXIT_BUDGET,
    }[outcome.verdict]


def _cmd_table(args) -> int:
    if args.format == "dot":
        raise InvalidParameterError("table output has no DOT form")
    if args.m_max < 4 or args.m_max % 2:
        raise InvalidParameterError(f"--m-max must be an even integer >= 4, got {args.m_max}")
    if args.n_extra < 0:
        raise InvalidParameterError(f"--n-extra must be non-negative, got {args.n_extra}")
    lines = ["cycle  path  min-path  result"]
    all_required_pass = True
    for m in range(4, args.m_max + 1, 2):
        minimum = min_path_order(m)
        for n in range(max(2, minimum - 2), minimum + args.n_extra + 1):
            spec = FamilySpec(m, n)
            labeling = label_closed_form(spec, BoundPolicy.FORCE)
            ok = verify_odd_graceful(make_union(spec), labeling).ok
            if n >= minimum and not ok:
                all_required_pass = False
            status = "PASS" if ok else "FAIL"
            note = "" if n >= minimum else "  (below minimum)"
            lines.append(f"{m:5d} {n:5d} {minimum:9d}  {status}{note}")
    _write(args, "\n".join(lines) + "\n")
    return EXIT_OK if all_required_pass else EXIT_INVALID


def _cmd_dot(args) -> int:
    g = parse_edge_list(Path(args.graph_file).read_text())
    labeling = None
    if args.labeling:
        doc = parse_labeling_document(Path(args.labeling).read_text())
        labeling = Labeling(doc.labels)
    _write(args, emit_dot(g, labeling))
    return EXIT_OK


@dataclass(frozen=True)
class BenchRow:
    edge_count: int
    spec: FamilySpec
    seconds: float
    verified: bool | None  # None when skipped by the verify limit


def family_for_size(edge_count: int, cycle_cap: int = BENCH_CYCLE_CAP) -> FamilySpec:
    """Largest valid even cycle order up to the cap, remainder to the path."""
    top = min(cycle_cap, edge_count - 1)
    top -= top % 2
    for m in range(top, 3, -2):
        n = edge_count + 1 - m
        if n >= max(2, min_path_order(m)):
            return FamilySpec(m, n)
    raise InvalidParameterError(f"no cycle/path split realizes edge count {edge_count}")


def run_bench(
    edge_counts: list[int],
    repeats: int = 3,
    verify_limit: int = 1_000_000,
) -> tuple[list[BenchRow], list[tuple[int, int, float]]]:
    """Best-of-`repeats` construction time per edge count, plus the doubling
    ratios time(2q)/time(q) for every q whose double is also listed."""
    rows = []
    for q in edge_counts:
        spec = family_for_size(q)
        best = float("inf")
        labeling = None
        for _ in range(max(1, repeats)):
            start = time.perf_counter()
            labeling = label_closed_form(spec)
            best = min(best, time.perf_counter() - start)
        verified = None
        if q <= verify_limit:
            verified = verify_odd_graceful(make_union(spec), labeling).ok
        rows.append(BenchRow(q, spec, best, verified))
    by_q = {row.edge_count: row for row in rows}
    ratios = []
    for q in sorted(by_q):
        if 2 * q in by_q:
            ratios.append((q, 2 * q, by_q[2 * q].seconds / by_q[q].seconds))
    return rows, ratios


def _cmd_bench(args) -> int:
    if args.format == "dot":
        raise InvalidParameterError("bench output has no DOT form")
    rows, ratios = run_bench(args.q_list, args.repeats, args.verify_limit)
    lines = []
    failed = False
    for row in rows:
        verdict = "skipped" if row.verified is None else ("pass" if row.verified else "FAIL")
        failed = failed or row.verified is False
        lines.append(
            f"edge_count={row.edge_count} cycle={row.spec.cycle_order} "
            f"path={row.spec.path_order} best_seconds={row.seconds:.6f} verify={verdict}"
        )
    for q, q2, ratio in ratios:
        lines.append(f"ratio t({q2})/t({q}) = {ratio:.2f}")
    _write(args, "\n".join(lines) + "\n")
    return EXIT_INVALID if failed else EXIT_OK
