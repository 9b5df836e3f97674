"""``rainbowdom`` command line: solve, verify, dp, audit and gen subcommands.

Exit codes: 0 success, 1 verification failure or audit violation, 2 bad
input, 3 solver budget exhausted, 4 precondition not met (isolated vertex,
DP state cap).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .audit import SUITES, run_suite
from .digraph import Digraph, format_edge_list, has_isolated_vertex, parse_edge_list, to_dot
from .errors import BudgetExceeded, InvalidInput
from .families import generate, parse_family
from .grid import MAX_COLUMN_STATES, GridSpec, closed_form, dp_gamma_trk
from .rainbow import RainbowAssignment, isolated_positive_vertex, uncovered_empty_vertex, weight
from .solve import SolveBudget, SolveResult, solve

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_PRECONDITION = 4

PARAMETERS = ("gamma", "gamma_t", "gamma_rk", "gamma_trk")


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _load_digraph(args) -> Digraph:
    try:
        if args.family:
            return generate(parse_family(args.family))
        return parse_edge_list(Path(args.file).read_text())
    except OSError as exc:
        raise _Exit(EXIT_INPUT, f"cannot read {args.file}: {exc.strerror}") from None
    except InvalidInput as exc:
        raise _Exit(EXIT_INPUT, str(exc)) from None


def _budget(args) -> SolveBudget:
    try:
        return SolveBudget(args.max_nodes, args.time_cap)
    except InvalidInput as exc:
        raise _Exit(EXIT_INPUT, str(exc)) from None


def _result_json(r: SolveResult, with_cert: bool) -> dict:
    return {
        "parameter": r.parameter,
        "k": r.k,
        "value": r.value,
        "certificate": r.certificate_json() if with_cert else None,
        "nodes": r.nodes_explored,
    }


def cmd_solve(args) -> int:
    d = _load_digraph(args)
    if args.param in ("gamma_rk", "gamma_trk") and args.k is None:
        raise _Exit(EXIT_INPUT, f"--k is required for {args.param}")
    if args.param in ("gamma_t", "gamma_trk") and has_isolated_vertex(d):
        raise _Exit(EXIT_PRECONDITION, f"{args.param} is undefined: the digraph has an isolated vertex")
    try:
        r = solve(d, args.param, args.k, _budget(args))
    except BudgetExceeded as exc:
        inc = exc.incumbent
        out = {"parameter": args.param, "k": args.k, "status": "budget_exceeded"}
        out["incumbent"] = None if inc is None else _result_json(inc, True)
        print(json.dumps(out))
        raise _Exit(EXIT_BUDGET, str(exc)) from None
    except InvalidInput as exc:
        raise _Exit(EXIT_INPUT, str(exc)) from None
    print(json.dumps(_result_json(r, not args.no_certificate)))
    return EXIT_OK


def cmd_verify(args) -> int:
    d = _load_digraph(args)
    try:
        f = RainbowAssignment.from_json(Path(args.assignment).read_text())
    except OSError as exc:
        raise _Exit(EXIT_INPUT, f"cannot read {args.assignment}: {exc.strerror}") from None
    except (InvalidInput, json.JSONDecodeError) as exc:
        raise _Exit(EXIT_INPUT, f"bad assignment file: {exc}") from None
    if args.k is not None and f.k != args.k:
        raise _Exit(EXIT_INPUT, f"assignment is for k={f.k}, expected k={args.k}")
    if f.n != d.n:
        raise _Exit(EXIT_INPUT, f"assignment labels {f.n} vertices, digraph has {d.n}")
    if args.total and has_isolated_vertex(d):
        raise _Exit(EXIT_PRECONDITION, "total labellings are undefined: the digraph has an isolated vertex")
    v = uncovered_empty_vertex(d, f)
    if v is not None:
        print(f"not a {f.k}RDF: empty vertex {v} does not see every colour among its in-neighbours")
        return EXIT_FAIL
    if args.total:
        v = isolated_positive_vertex(d, f)
        if v is not None:
            print(f"not total: positive vertex {v} has no positive neighbour")
            return EXIT_FAIL
    print(f"ok: valid {'total ' if args.total else ''}{f.k}-rainbow dominating function of weight {weight(f)}")
    return EXIT_OK


def cmd_dp(args) -> int:
    try:
        spec = GridSpec(args.m, args.n, args.k)
    except InvalidInput as exc:
        raise _Exit(EXIT_INPUT, str(exc)) from None
    if spec.column_states > MAX_COLUMN_STATES or spec.m * spec.n < 2:
        raise _Exit(EXIT_PRECONDITION, f"grid {spec.m}x{spec.n} with k={spec.k} is outside the DP's range")
    r = dp_gamma_trk(spec)
    formula = closed_form(spec)
    out = {
        "m": spec.m,
        "n": spec.n,
        "k": spec.k,
        "value": r.value,
        "formula": formula,
        "agree": None if formula is None else formula == r.value,
        "tie_break_empty_count": r.tie_break_empty_count,
    }
    if args.certificate:
        out["certificate"] = r.certificate.to_json()
    print(json.dumps(out))
    return EXIT_FAIL if out["agree"] is False else EXIT_OK


def cmd_audit(args) -> int:
    if args.jobs < 1:
        raise _Exit(EXIT_INPUT, "--jobs must be at least 1")
    report = run_suite(args.suite, seed=args.seed, budget=_budget(args), jobs=args.jobs, random_count=args.random_count)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    stem = out / f"audit-{args.suite}-seed{args.seed}"
    stem.with_suffix(".json").write_text(report.to_json(timing=not args.no_timing) + "\n")
    text = report.to_text()
    stem.with_suffix(".txt").write_text(text)
    print(text, end="")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_gen(args) -> int:
    try:
        d = generate(parse_family(args.family))
    except InvalidInput as exc:
        raise _Exit(EXIT_INPUT, str(exc)) from None
    text = to_dot(d) if args.dot else format_edge_list(d)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", help="generated family, e.g. star:4, grid:2x5, remark2:t=2,k=2,sizes=4,4")
    src.add_argument("--file", help="edge-list file: 'n m' then m lines 'u v'")


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-nodes", type=int, default=SolveBudget.max_nodes, help="search-node cap per solve")
    p.add_argument("--time-cap", type=float, default=SolveBudget.time_cap, help="seconds per solve")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rainbowdom", description="Total k-rainbow domination in digraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact domination parameter with a certificate")
    _add_source(p)
    p.add_argument("--param", choices=PARAMETERS, default="gamma_trk")
    p.add_argument("--k", type=int)
    p.add_argument("--no-certificate", action="store_true")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="accepted for symmetry; a single solve is sequential")
    _add_budget(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a labelling against a digraph")
    _add_source(p)
    p.add_argument("assignment", help='JSON file {"k": K, "values": [[colours], ...]}')
    p.add_argument("--k", type=int)
    p.add_argument("--total", action="store_true", help="also require the positive vertices to have no isolated vertex")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dp", help="grid dynamic program for P_m x P_n")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--certificate", action="store_true")
    p.set_defaults(func=cmd_dp)

    p = sub.add_parser("audit", help="check every bound and formula against exact values")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--random-count", type=int, default=200, help="size of the random corpus")
    p.add_argument("--out", default="audit-reports", help="directory for the JSON and text reports")
    p.add_argument("--no-timing", action="store_true", help="omit runtimes from the JSON for byte-stable output")
    _add_budget(p)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("gen", help="write a generated family as an edge list")
    p.add_argument("family")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"rainbowdom {args.command}: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
