"""Command line interface.

Subcommands: ``solve`` (one heuristic run on one graph), ``exact`` (the
branch-and-bound oracle), ``bench`` (seeded multi-run suite with table
output), ``info`` (graph summaries). Exit codes: 0 success, 1 usage
error, 2 data error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .backends import available_backends, default_backend
from .bench import (ALGORITHM_MODES, DatasetError, DatasetSpec,
                    SuiteConfig, emit_report, raw_log, run_suite)
from .configio import ConfigError, load_solver_config, load_suite_config
from .exact import max_clique_exact
from .graph import GraphError, summarize
from .io import ParseError, load_graph
from .solver import SolverConfig, run

USAGE_ERROR = 1
DATA_ERROR = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems via exception so cli_main can
    map them to exit code 1."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="swarmclique",
                     description="Maximum-clique heuristics, exact oracle, "
                                 "and benchmark harness.")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="run one heuristic search on a graph")
    solve.add_argument("graph", help="graph file (.net, .gml, or edge list)")
    solve.add_argument("--algo", default="aco_pso", choices=sorted(ALGORITHM_MODES),
                       help="reinforcement rule (default: aco_pso)")
    solve.add_argument("--seed", type=int, default=0)
    solve.add_argument("--iterations", type=int, default=None)
    solve.add_argument("--ants", type=int, default=None)
    solve.add_argument("--config", default=None,
                       help="flat key=value solver config file")
    solve.add_argument("--format", default="text", choices=("text", "json"))
    solve.add_argument("--out", default=None, help="write output to a file")
    solve.add_argument("--trace-out", default=None,
                       help="write the per-iteration JSONL log to a file")
    solve.add_argument("--backend", default=None, choices=("c", "pure"))

    exact = sub.add_parser("exact", help="exact maximum clique (oracle)")
    exact.add_argument("graph")
    exact.add_argument("--time-limit", type=float, default=None)
    exact.add_argument("--node-limit", type=int, default=None)
    exact.add_argument("--format", default="text", choices=("text", "json"))
    exact.add_argument("--out", default=None)

    bench = sub.add_parser("bench", help="seeded multi-run benchmark suite")
    bench.add_argument("graphs", nargs="*", help="graph files")
    bench.add_argument("--config", default=None,
                       help="suite config file with [dataset NAME] sections")
    bench.add_argument("--algo", default=None,
                       help="comma-separated algorithms (default: aco_pso)")
    bench.add_argument("--runs", type=int, default=None)
    bench.add_argument("--iterations", type=int, default=None)
    bench.add_argument("--seed", type=int, default=None,
                       help="base seed; run k uses base+k")
    bench.add_argument("--format", default="markdown",
                       choices=("markdown", "csv", "json"))
    bench.add_argument("--out", default=None)
    bench.add_argument("--raw-out", default=None,
                       help="write per-iteration JSONL for every run")
    bench.add_argument("--oracle-check", action="store_true",
                       help="annotate rows with the exact optimum")
    bench.add_argument("--workers", type=int, default=None)
    bench.add_argument("--no-runtime", action="store_true",
                       help="omit wall-clock columns (reproducible output)")
    bench.add_argument("--backend", default=None, choices=("c", "pure"))

    info = sub.add_parser("info", help="node/edge counts and degree stats")
    info.add_argument("graphs", nargs="+")
    info.add_argument("--format", default="text", choices=("text", "json"))

    backends = sub.add_parser("backends", help="show available kernel backends")
    del backends

    return parser


def _write(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _cmd_solve(args) -> int:
    patches = load_solver_config(args.config) if args.config else {}
    patches["reinforcement_mode"] = ALGORITHM_MODES[args.algo]
    patches["seed"] = args.seed
    if args.iterations is not None:
        patches["iterations"] = args.iterations
    if args.ants is not None:
        patches["ants"] = args.ants
    cfg = SolverConfig(**patches)
    graph = load_graph(args.graph)
    record = run(graph, cfg, backend=args.backend)
    members = record.best.members
    if args.format == "json":
        text = json.dumps({
            "graph": args.graph, "n": graph.n, "m": graph.m,
            "algorithm": args.algo, "seed": args.seed,
            "iterations": cfg.iterations,
            "best_size": record.best.size,
            "best_members": list(members),
            "best_labels": [graph.label_of(v) for v in members],
        }, sort_keys=True, indent=2) + "\n"
    else:
        labels = ", ".join(graph.label_of(v) for v in members)
        text = (f"graph: {args.graph} ({graph.n} nodes, {graph.m} edges)\n"
                f"algorithm: {args.algo}  seed: {args.seed}  "
                f"iterations: {cfg.iterations}\n"
                f"best clique size: {record.best.size}\n"
                f"members: {list(members)}\n"
                f"labels: {labels}\n")
    _write(text, args.out)
    print(f"wall time: {record.wall_time:.2f}s", file=sys.stderr)
    if args.trace_out:
        Path(args.trace_out).write_text(record.to_jsonl())
    return 0


def _cmd_exact(args) -> int:
    graph = load_graph(args.graph)
    result = max_clique_exact(graph, time_limit=args.time_limit,
                              node_limit=args.node_limit)
    members = result.best.members
    if args.format == "json":
        text = json.dumps({
            "graph": args.graph, "n": graph.n, "m": graph.m,
            "optimum_size": result.optimum_size,
            "members": list(members),
            "labels": [graph.label_of(v) for v in members],
            "completed": result.completed,
            "explored_nodes": result.explored_nodes,
            "elapsed": result.elapsed,
        }, sort_keys=True, indent=2) + "\n"
    else:
        status = "optimal" if result.completed else "budget hit, best so far"
        text = (f"graph: {args.graph} ({graph.n} nodes, {graph.m} edges)\n"
                f"maximum clique size: {result.optimum_size} ({status})\n"
                f"members: {list(members)}\n"
                f"labels: {', '.join(graph.label_of(v) for v in members)}\n"
                f"explored nodes: {result.explored_nodes}  "
                f"elapsed: {result.elapsed:.2f}s\n")
    _write(text, args.out)
    return 0


def _cmd_bench(args) -> int:
    if args.config:
        suite = load_suite_config(args.config)
        if args.graphs:
            raise UsageError("bench: give either --config or graph paths, not both")
    else:
        if not args.graphs:
            raise UsageError("bench: need graph paths or --config")
        datasets = [DatasetSpec(Path(p).stem, p) for p in args.graphs]
        suite = SuiteConfig(datasets=datasets)
    if args.algo is not None:
        suite.algorithms = tuple(a.strip() for a in args.algo.split(",")
                                 if a.strip())
    if args.runs is not None:
        suite.runs = args.runs
    if args.iterations is not None:
        suite.iterations = args.iterations
    if args.seed is not None:
        suite.base_seed = args.seed
    if args.workers is not None:
        suite.workers = args.workers
    if args.oracle_check:
        suite.oracle_check = True
    if args.raw_out:
        suite.collect_traces = True

    report = run_suite(suite, backend=args.backend)
    text = emit_report(report, args.format, include_runtime=not args.no_runtime)
    _write(text, args.out)
    if args.raw_out:
        Path(args.raw_out).write_text(raw_log(report))
    return 0


def _cmd_info(args) -> int:
    entries = []
    for path in args.graphs:
        s = summarize(load_graph(path))
        entries.append((path, s))
    if args.format == "json":
        text = json.dumps([{
            "graph": path, "n": s.n, "edges": s.m,
            "min_degree": s.min_degree, "max_degree": s.max_degree,
            "mean_degree": s.mean_degree,
        } for path, s in entries], sort_keys=True, indent=2) + "\n"
    else:
        lines = []
        for path, s in entries:
            lines.append(f"{path}: {s.n} nodes, {s.m} edges, degree "
                         f"min/max/mean = {s.min_degree}/{s.max_degree}/"
                         f"{s.mean_degree:.4f}")
        text = "\n".join(lines) + "\n"
    _write(text, None)
    return 0


def _cmd_backends(_args) -> int:
    names = available_backends()
    default = default_backend()
    for name in names:
        marker = " (default)" if name == default else ""
        print(f"{name}{marker}")
    return 0


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        handler = {
            "solve": _cmd_solve,
            "exact": _cmd_exact,
            "bench": _cmd_bench,
            "info": _cmd_info,
            "backends": _cmd_backends,
        }[args.command]
        return handler(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        # bad flag combinations or config values the parser cannot see
        if isinstance(exc, (ParseError, ConfigError, DatasetError, GraphError)):
            print(f"error: {exc}", file=sys.stderr)
            return DATA_ERROR
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
