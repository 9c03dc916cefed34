"""Command line entry point: ``spcut <command> [options]``.

Exit codes: 0 success, 2 usage, 3 input error, 4 not series parallel,
5 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import kernel
from .bench import CSV_FIELDS, run_bench
from .errors import InputError, NotSeriesParallel
from .formats import format_script, parse_graph_file, parse_script_file
from .graph import Cut, Multigraph, format_weight
from .oracle import BruteObjective, brute_solve, cut_weight_table
from .solver import Objective, solve_full
from .spgraph import build_from_script, random_sp_script
from .twosum import solve_two_sum_full
from .verify import CLAIMS, run_claim

EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_NOT_SP = 4
EXIT_VERIFY = 5

SOLVER_OBJECTIVES = {"max-cs-cut": Objective.MAX, "min-cut": Objective.MIN}
ORACLE_OBJECTIVES = {
    "max-cs-cut": BruteObjective.MAX_CS,
    "min-cut": BruteObjective.MIN_CS,
    "min-all-cuts": BruteObjective.MIN_ALL,
}


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(path: str, fmt: str):
    """Graph plus the labeling a script provides (``None`` for EDGE files)."""
    text = _read(path)
    if fmt == "script":
        return build_from_script(parse_script_file(text))
    return parse_graph_file(text), None


def cut_document(objective: str, g: Multigraph, cut: Cut, stats: dict) -> dict:
    return {
        "objective": objective,
        "weight": format_weight(cut.weight, g.scale),
        "cut_edges": sorted(cut.edge_ids),
        "side": sorted(cut.side),
        "valid": cut.is_cs_cut,
        "stats": {"n": g.n, "m": g.m, **stats},
    }


def _emit(doc, pretty: bool) -> None:
    print(json.dumps(doc, indent=2 if pretty else None))


def cmd_solve(args) -> int:
    g, labeling = load_graph(args.input, args.format)
    res = solve_full(g, labeling, SOLVER_OBJECTIVES[args.objective], guarded=not args.unguarded)
    stats = {"candidates": res.candidates, "invalid_candidates": res.invalid_candidates}
    doc = cut_document(args.objective, g, res.cut, stats)
    if args.unguarded:
        doc["unguarded"] = True
    _emit(doc, args.json)
    return 0


def cmd_oracle(args) -> int:
    g, _ = load_graph(args.input, args.format)
    cut = brute_solve(g, ORACLE_OBJECTIVES[args.objective])
    _, _, cs = cut_weight_table(g)
    stats = {"candidates": int(len(cs)), "invalid_candidates": int((~cs).sum())}
    _emit(cut_document(args.objective, g, cut, stats), args.json)
    return 0


def cmd_gen(args) -> int:
    lo, hi = args.wmin, args.wmax
    script = random_sp_script(args.seed, args.ops, (lo, hi), args.signed)
    sys.stdout.write(format_script(script))
    return 0


def cmd_twosum(args) -> int:
    g1, _ = load_graph(args.left, args.format)
    g2, _ = load_graph(args.right, args.format)
    objective = SOLVER_OBJECTIVES[args.objective]
    if objective is Objective.MIN and any(e.w <= 0 for g in (g1, g2) for e in g.edges):
        raise InputError("NotPositiveWeights: minimum cut needs strictly positive weights")
    ts, cut, trace = solve_two_sum_full(g1, args.edge_left, g2, args.edge_right, objective)
    stats = {
        "subsolver_calls": trace.subsolver_calls,
        "comparisons": trace.comparisons,
        "candidate_weights": [
            None if c is None else format_weight(c.weight, ts.graph.scale) for c in trace.candidates
        ],
    }
    _emit(cut_document(args.objective, ts.graph, cut, stats), args.json)
    return 0


def cmd_verify(args) -> int:
    report = run_claim(args.claim, args.trials, args.seed, args.max_n)
    for seed, problems in report.messages.items():
        for p in problems:
            print(f"seed {seed}: {p}", file=sys.stderr)
    _emit(report.as_dict(), args.json)
    return 0 if report.ok else EXIT_VERIFY


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    if args.backend == "both":
        backends = kernel.available_backends()[::-1]
    else:
        backends = [args.backend]
        kernel.get_backend(args.backend)
    writer = csv.DictWriter(sys.stdout, fieldnames=CSV_FIELDS)
    writer.writeheader()
    for row in run_bench(sizes, args.reps, backends, args.seed):
        row = dict(row)
        row["core_median_s"] = f"{row['core_median_s']:.6f}"
        row["guarded_median_s"] = f"{row['guarded_median_s']:.6f}"
        writer.writerow(row)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spcut", description="Connected-sides cuts on series-parallel multigraphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p, objectives):
        p.add_argument("--objective", choices=sorted(objectives), default="max-cs-cut")
        p.add_argument("--input", required=True, help="graph file, or - for stdin")
        p.add_argument("--format", choices=("edges", "script"), default="edges")
        p.add_argument("--json", action="store_true", help="pretty-print the JSON document")

    p = sub.add_parser("solve", help="two-phase contraction solver")
    add_input(p, SOLVER_OBJECTIVES)
    p.add_argument("--unguarded", action="store_true",
                   help="diagnostic: let every trivial-cut candidate compete")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="brute force over all bipartitions (n <= 16)")
    add_input(p, ORACLE_OBJECTIVES)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="random SP script on stdout")
    p.add_argument("--ops", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--wmin", type=int, default=1)
    p.add_argument("--wmax", type=int, default=100)
    p.add_argument("--signed", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("twosum", help="solve on the 2-sum of two graphs")
    p.add_argument("--left", required=True)
    p.add_argument("--edge-left", type=int, required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--edge-right", type=int, required=True)
    p.add_argument("--objective", choices=sorted(SOLVER_OBJECTIVES), default="max-cs-cut")
    p.add_argument("--format", choices=("edges", "script"), default="edges")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_twosum)

    p = sub.add_parser("verify", help="randomized check of a claim against brute force")
    p.add_argument("--claim", choices=CLAIMS, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="median core runtimes as CSV")
    p.add_argument("--sizes", default="16384,32768,65536,131072")
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--backend", choices=("cython", "python", "both"), default="both")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotSeriesParallel as exc:
        print(f"error: NotSeriesParallel: {exc}", file=sys.stderr)
        return EXIT_NOT_SP
    except (InputError, RuntimeError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
