"""Command-line interface: ``harmolight {analyze,evolve,digraph,union,power,survey}``.

Exit status is 0 on success, 1 when a cross-check or invariant fails, and
2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .analysis import Structure, analyze, verify
from .dynamics import DEFAULT_MAX_STEPS, DEFAULT_STATE_LIMIT, brute_digraph, evolve, export_dot
from .gf2 import BitVector
from .graphs import Graph, harmonic_matrix, parse_graph, to_graph6
from .ops import disjoint_union, power_graph, power_prediction, union_prediction, windowed_tree_weights
from .survey import DEFAULT_MAX_N, run_survey

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


def default_state_limit() -> int:
    env = os.environ.get("HARMOLIGHT_STATE_LIMIT")
    if env is None:
        return DEFAULT_STATE_LIMIT
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"HARMOLIGHT_STATE_LIMIT must be an integer, got {env!r}") from None


def read_graph(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def graph_echo(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edge_list], "graph6": to_graph6(g)}


def analysis_report(g: Graph, s: Structure, check: bool = False, state_limit: int = DEFAULT_STATE_LIMIT) -> dict:
    a = harmonic_matrix(g)
    report = {
        "graph": graph_echo(g),
        "harmonic_matrix": [BitVector(a.dim, r).to_bitstring() for r in a.rows],
        **s.profile.as_dict(),
        "kernel_filtration": list(s.filtration),
        "fixed_dims": {str(d): f for d, f in sorted(s.fixed.items())},
        "tree": s.tree.render(),
        "loops": s.loops.render(),
        "verification": None,
    }
    if check:
        report["verification"] = verify(a, s, state_limit=state_limit).as_dict()
    return report


def _text(report: dict, indent: str = "") -> str:
    lines = []
    for key, value in report.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.append(_text(value, indent + "  "))
        else:
            lines.append(f"{indent}{key}: {value}")
    return "\n".join(lines)


def emit(payload: dict, fmt: str) -> None:
    if fmt == "text":
        print(_text(payload))
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))


def _verification_failed(*reports: dict) -> bool:
    return any(r.get("verification") and not r["verification"]["ok"] for r in reports)


def cmd_analyze(args) -> int:
    g = read_graph(args.graph)
    report = analysis_report(g, analyze(g), check=args.verify, state_limit=args.state_limit)
    emit(report, args.format)
    return EXIT_MISMATCH if _verification_failed(report) else EXIT_OK


def cmd_evolve(args) -> int:
    g = read_graph(args.graph)
    if len(args.state) != g.n:
        raise UsageError(f"state has length {len(args.state)}, graph has {g.n} vertices")
    try:
        s = BitVector.from_bitstring(args.state)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    trace = evolve(g, s, max_steps=args.max_steps, keep_trajectory=True)
    emit(trace.as_dict(), args.format)
    return EXIT_OK


def cmd_digraph(args) -> int:
    g = read_graph(args.graph)
    sys.stdout.write(export_dot(brute_digraph(g, state_limit=args.state_limit)))
    return EXIT_OK


def cmd_union(args) -> int:
    g1, g2 = read_graph(args.graph1), read_graph(args.graph2)
    s1, s2 = analyze(g1), analyze(g2)
    u = disjoint_union(g1, g2)
    su = analyze(u)
    tree, loops = union_prediction(s1.tree, s1.loops, s2.tree, s2.loops)
    direct = analysis_report(u, su, check=args.verify, state_limit=args.state_limit)
    match = tree == su.tree and loops == su.loops
    payload = {
        "direct": direct,
        "predicted": {"tree": tree.render(), "loops": loops.render()},
        "match": match,
    }
    emit(payload, args.format)
    return EXIT_OK if match and not _verification_failed(direct) else EXIT_MISMATCH


def cmd_power(args) -> int:
    if args.q < 1:
        raise UsageError("q must be at least 1")
    g = read_graph(args.graph)
    s = analyze(g)
    gq = power_graph(g, args.q)
    sq = analyze(gq)
    pred = power_prediction(s.profile, s.tree, s.loops, args.q)
    checks = {
        "tail_k": pred.tail_pred == sq.profile.tail_k,
        "period_m": pred.period_pred == sq.profile.period_m,
        "tree": pred.tree_pred == sq.tree,
        "loops": pred.loops_pred == sq.loops,
    }
    direct = analysis_report(gq, sq, check=args.verify, state_limit=args.state_limit)
    payload = {
        "q": args.q,
        "source": {"graph": graph_echo(g), "tree": s.tree.render(), "loops": s.loops.render(), **s.profile.as_dict()},
        "direct": direct,
        "predicted": pred.as_dict(),
        "checks": checks,
        "match": all(checks.values()),
        "windowed_tree_formula": {str(i): w for i, w in windowed_tree_weights(s.tree, args.q).items()},
    }
    emit(payload, args.format)
    return EXIT_OK if payload["match"] and not _verification_failed(direct) else EXIT_MISMATCH


def cmd_survey(args) -> int:
    if args.max_n > args.enum_limit:
        raise UsageError(f"max_n={args.max_n} exceeds enumeration limit {args.enum_limit}")
    report = run_survey(args.max_n, workers=args.workers, enum_limit=args.enum_limit)
    print(report.to_json())
    return EXIT_MISMATCH if report.violations else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--verify", action="store_true", help="cross-check against exhaustive enumeration")
    common.add_argument("--state-limit", type=int, default=None, help="max states to enumerate")
    common.add_argument("--max-steps", "--steps", dest="max_steps", type=int, default=DEFAULT_MAX_STEPS)
    common.add_argument("--workers", type=int, default=1)

    parser = argparse.ArgumentParser(prog="harmolight", description="Harmonic evolution of graphs over GF(2).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="tree and loop structure of a graph")
    p.add_argument("graph", help="graph file (edge list or graph6), '-' for stdin")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("evolve", parents=[common], help="trace the evolution of one state")
    p.add_argument("graph")
    p.add_argument("state", help="bitstring, vertex 0 first")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("digraph", parents=[common], help="DOT rendering of the evolution digraph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_digraph)

    p = sub.add_parser("union", parents=[common], help="disjoint union with predicted structure")
    p.add_argument("graph1")
    p.add_argument("graph2")
    p.set_defaults(func=cmd_union)

    p = sub.add_parser("power", parents=[common], help="power graph with predicted structure")
    p.add_argument("graph")
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("survey", parents=[common], help="sweep all labeled graphs up to max_n vertices")
    p.add_argument("max_n", type=int)
    p.add_argument("--enum-limit", type=int, default=DEFAULT_MAX_N)
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.state_limit is None:
            args.state_limit = default_state_limit()
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"harmolight: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (RuntimeError, ArithmeticError) as exc:
        print(f"harmolight: error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
