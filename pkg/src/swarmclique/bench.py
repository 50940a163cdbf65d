"""Benchmark harness: seeded multi-run experiments with Best/Avg/Std/
runtime aggregation.

Protocol: for every (dataset, algorithm) pair the suite executes
``runs`` independent solver runs seeded ``base_seed + run_index``, then
reports the max, mean, and population standard deviation of the per-run
best clique sizes plus the mean wall time. Runs may execute in parallel
worker processes; aggregation is keyed by (dataset, algorithm, run), so
the report is identical however the work was scheduled.
"""

from __future__ import annotations

import concurrent.futures
import csv
import dataclasses
import io as _io
import json
import platform
import statistics
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from .exact import max_clique_exact
from .graph import Graph, is_clique
from .io import load_graph
from .solver import RunRecord, SolverConfig, run

ALGORITHM_MODES = {
    "aco_quality_gap": "quality_gap",
    "aco_pso": "pso",
    "aco_binary": "binary",
}

METRIC_COLUMNS = ("graph", "best", "avg", "std", "run_time")


class DatasetError(ValueError):
    """A dataset could not be loaded; aborts the whole suite."""


@dataclass(frozen=True)
class DatasetSpec:
    name: str
    path: Union[str, Path]
    fmt: Optional[str] = None  # None: infer from the file extension


@dataclass
class SuiteConfig:
    datasets: list[DatasetSpec]
    algorithms: tuple[str, ...] = ("aco_pso",)
    runs: int = 10
    iterations: int = 1000
    base_seed: int = 0
    solver_defaults: dict = field(default_factory=dict)
    overrides: dict = field(default_factory=dict)  # dataset name -> patches
    oracle_check: bool = False
    oracle_time_limit: float = 30.0
    workers: int = 1
    collect_traces: bool = False

    def validate(self) -> None:
        if not self.datasets:
            raise ValueError("suite needs at least one dataset")
        if self.runs < 1:
            raise ValueError(f"runs must be >= 1, got {self.runs}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        unknown = [a for a in self.algorithms if a not in ALGORITHM_MODES]
        if unknown:
            raise ValueError(f"unknown algorithms {unknown}; "
                             f"choose from {sorted(ALGORITHM_MODES)}")
        names = [d.name for d in self.datasets]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate dataset names in {names}")


@dataclass
class RunOutcome:
    """One solver run, successful or not; failures carry the error text
    instead of being dropped."""

    dataset: str
    algorithm: str
    run_index: int
    seed: int
    best_size: Optional[int] = None
    best_members: Optional[tuple[int, ...]] = None
    wall_time: Optional[float] = None
    error: Optional[str] = None
    trace_jsonl: Optional[str] = None


@dataclass
class ReportRow:
    dataset: str
    algorithm: str
    best: Optional[int]
    avg: Optional[float]
    std: Optional[float]
    mean_run_time: Optional[float]
    run_bests: list[int]
    failures: list[str]
    optimum: Optional[int] = None
    optimum_exact: Optional[bool] = None
    gap: Optional[bool] = None


@dataclass
class BenchmarkReport:
    rows: list[ReportRow]
    raw: list[RunOutcome]
    environment: dict
    algorithms: tuple[str, ...]


def _solver_config(suite: SuiteConfig, dataset: str, algorithm: str,
                   seed: int) -> SolverConfig:
    patches = dict(suite.solver_defaults)
    patches.update(suite.overrides.get(dataset, {}))
    patches["iterations"] = patches.get("iterations", suite.iterations)
    patches["reinforcement_mode"] = ALGORITHM_MODES[algorithm]
    patches["seed"] = seed
    return SolverConfig(**patches)


def _execute(graph: Graph, dataset: str, algorithm: str, run_index: int,
             cfg: SolverConfig, collect_trace: bool,
             backend: Optional[str]) -> RunOutcome:
    try:
        record: RunRecord = run(graph, cfg, backend=backend)
        if not is_clique(graph, record.best.members):
            raise AssertionError(f"best {record.best.members} failed verification")
        return RunOutcome(dataset, algorithm, run_index, cfg.seed,
                          best_size=record.best.size,
                          best_members=record.best.members,
                          wall_time=record.wall_time,
                          trace_jsonl=record.to_jsonl() if collect_trace else None)
    except Exception as exc:  # contained: becomes a row annotation
        return RunOutcome(dataset, algorithm, run_index, cfg.seed,
                          error=f"{type(exc).__name__}: {exc}")


def run_suite(suite: SuiteConfig, backend: Optional[str] = None) -> BenchmarkReport:
    """Execute the whole suite and aggregate. Dataset load errors abort;
    individual run failures are contained and annotated on their row."""
    suite.validate()
    graphs: dict[str, Graph] = {}
    for spec in suite.datasets:
        try:
            graphs[spec.name] = load_graph(spec.path, spec.fmt)
        except Exception as exc:
            raise DatasetError(f"dataset {spec.name!r} ({spec.path}): {exc}") from exc

    tasks = []
    for spec in suite.datasets:
        for algorithm in suite.algorithms:
            for k in range(suite.runs):
                cfg = _solver_config(suite, spec.name, algorithm,
                                     suite.base_seed + k)
                tasks.append((spec.name, algorithm, k, cfg))

    outcomes: dict[tuple[str, str, int], RunOutcome] = {}
    if suite.workers == 1:
        for name, algorithm, k, cfg in tasks:
            outcomes[(name, algorithm, k)] = _execute(
                graphs[name], name, algorithm, k, cfg,
                suite.collect_traces, backend)
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=suite.workers) as pool:
            futures = {
                pool.submit(_execute, graphs[name], name, algorithm, k, cfg,
                            suite.collect_traces, backend): (name, algorithm, k)
                for name, algorithm, k, cfg in tasks
            }
            for future in concurrent.futures.as_completed(futures):
                outcomes[futures[future]] = future.result()

    oracle: dict[str, tuple[Optional[int], bool]] = {}
    if suite.oracle_check:
        for spec in suite.datasets:
            result = max_clique_exact(graphs[spec.name],
                                      time_limit=suite.oracle_time_limit)
            oracle[spec.name] = (result.optimum_size, result.completed)

    rows = []
    raw = []
    for algorithm in suite.algorithms:
        for spec in suite.datasets:
            per_run = [outcomes[(spec.name, algorithm, k)]
                       for k in range(suite.runs)]
            raw.extend(per_run)
            bests = [o.best_size for o in per_run if o.error is None]
            failures = [f"run {o.run_index}: {o.error}"
                        for o in per_run if o.error is not None]
            times = [o.wall_time for o in per_run if o.error is None]
            row = ReportRow(
                dataset=spec.name,
                algorithm=algorithm,
                best=max(bests) if bests else None,
                avg=statistics.fmean(bests) if bests else None,
                std=statistics.pstdev(bests) if bests else None,
                mean_run_time=statistics.fmean(times) if times else None,
                run_bests=bests,
                failures=failures,
            )
            if spec.name in oracle:
                optimum, exact = oracle[spec.name]
                row.optimum = optimum
                row.optimum_exact = exact
                if exact and row.best is not None:
                    row.gap = row.best < optimum
            rows.append(row)

    environment = {
        "platform": platform.platform(),
        "python": platform.python_version(),
        "package": _package_version(),
        "std_convention": "population standard deviation over per-run bests",
    }
    return BenchmarkReport(rows=rows, raw=raw, environment=environment,
                           algorithms=tuple(suite.algorithms))


def _package_version() -> str:
    from . import __version__
    return __version__


# -- emission ----------------------------------------------------------------

def _fmt(value, spec: str) -> str:
    return "" if value is None else format(value, spec)


def _row_cells(row: ReportRow, include_runtime: bool, with_oracle: bool,
               with_failures: bool) -> list[str]:
    cells = [row.dataset,
             _fmt(row.best, "d"),
             _fmt(row.avg, ".3f"),
             _fmt(row.std, ".3f")]
    if include_runtime:
        cells.append(_fmt(row.mean_run_time, ".2f"))
    if with_oracle:
        cells.append(_fmt(row.optimum, "d"))
        cells.append("" if row.gap is None else ("yes" if row.gap else "no"))
    if with_failures:
        cells.append("; ".join(row.failures))
    return cells


def _header(include_runtime: bool, with_oracle: bool,
            with_failures: bool) -> list[str]:
    head = ["Graph", "Best", "Avg", "Std"]
    if include_runtime:
        head.append("Run-time")
    if with_oracle:
        head.extend(["Optimum", "Gap"])
    if with_failures:
        head.append("Failures")
    return head


def emit_report(report: BenchmarkReport, fmt: str = "markdown",
                include_runtime: bool = True) -> str:
    """Render the report. A pure function of its inputs: emitting the same
    report twice gives byte-identical text. ``include_runtime=False``
    drops every wall-clock field, which makes the output reproducible
    across hosts and schedulers."""
    if not report.rows:
        raise ValueError("cannot emit an empty report")
    with_oracle = any(r.optimum is not None for r in report.rows)
    with_failures = any(r.failures for r in report.rows)
    if fmt == "markdown":
        return _emit_markdown(report, include_runtime, with_oracle, with_failures)
    if fmt == "csv":
        return _emit_csv(report, include_runtime, with_oracle, with_failures)
    if fmt == "json":
        return _emit_json(report, include_runtime)
    raise ValueError(f"unknown report format {fmt!r}; "
                     "expected markdown, csv, or json")


def _emit_markdown(report, include_runtime, with_oracle, with_failures) -> str:
    head = _header(include_runtime, with_oracle, with_failures)
    out = []
    for algorithm in report.algorithms:
        rows = [r for r in report.rows if r.algorithm == algorithm]
        out.append(f"### {algorithm}")
        out.append("")
        out.append("| " + " | ".join(head) + " |")
        out.append("|" + "|".join("---" for _ in head) + "|")
        for row in rows:
            cells = _row_cells(row, include_runtime, with_oracle, with_failures)
            out.append("| " + " | ".join(cells) + " |")
        out.append("")
    out.append(f"Std: {report.environment['std_convention']}.")
    if include_runtime:
        out.append("Run-time: mean wall seconds per run on "
                   f"{report.environment['platform']}; not comparable "
                   "across machines.")
    return "\n".join(out) + "\n"


def _emit_csv(report, include_runtime, with_oracle, with_failures) -> str:
    multi = len(report.algorithms) > 1
    head = _header(include_runtime, with_oracle, with_failures)
    head = [h.lower().replace("-", "_") for h in head]
    if multi:
        head = ["algorithm"] + head
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(head)
    for algorithm in report.algorithms:
        for row in report.rows:
            if row.algorithm != algorithm:
                continue
            cells = _row_cells(row, include_runtime, with_oracle, with_failures)
            writer.writerow(([algorithm] if multi else []) + cells)
    return buf.getvalue()


def _emit_json(report, include_runtime) -> str:
    def outcome_dict(o: RunOutcome) -> dict:
        d = dataclasses.asdict(o)
        if not include_runtime:
            d.pop("wall_time")
        return d

    def row_dict(r: ReportRow) -> dict:
        d = dataclasses.asdict(r)
        if not include_runtime:
            d.pop("mean_run_time")
        return d

    payload = {
        "rows": [row_dict(r) for r in report.rows],
        "raw": [outcome_dict(o) for o in report.raw],
        "environment": report.environment,
        "algorithms": list(report.algorithms),
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def raw_log(report: BenchmarkReport) -> str:
    """Line-delimited log of all per-iteration records of all runs (only
    available when the suite collected traces)."""
    lines = []
    for outcome in report.raw:
        if outcome.trace_jsonl is None:
            continue
        tag = json.dumps({"dataset": outcome.dataset,
                          "algorithm": outcome.algorithm,
                          "run_index": outcome.run_index,
                          "seed": outcome.seed}, separators=(",", ":"))
        for line in outcome.trace_jsonl.splitlines():
            lines.append(tag[:-1] + "," + line[1:])
    return "\n".join(lines) + "\n" if lines else ""


# -- comparison ---------------------------------------------------------------

def compare(a: BenchmarkReport, b: BenchmarkReport,
            a_name: str = "A", b_name: str = "B") -> str:
    """Per-dataset Best/Avg deltas between two single-algorithm reports
    covering the same datasets (A minus B), with a sign summary. No
    statistical test is implied, only mean/std arithmetic."""
    for name, rep in ((a_name, a), (b_name, b)):
        if len(rep.algorithms) != 1:
            raise ValueError(f"report {name} must hold exactly one algorithm, "
                             f"has {rep.algorithms}")
    rows_a = {r.dataset: r for r in a.rows}
    rows_b = {r.dataset: r for r in b.rows}
    if set(rows_a) != set(rows_b):
        only_a = sorted(set(rows_a) - set(rows_b))
        only_b = sorted(set(rows_b) - set(rows_a))
        raise ValueError(f"dataset sets differ: only in {a_name}: {only_a}; "
                         f"only in {b_name}: {only_b}")

    lines = [f"{a_name} ({a.algorithms[0]}) vs {b_name} ({b.algorithms[0]})",
             f"{'dataset':<16} {'best':>6} {'best':>6} {'d_best':>7} "
             f"{'avg':>8} {'avg':>8} {'d_avg':>8}"]
    better = worse = tied = 0
    for dataset in (r.dataset for r in a.rows):
        ra, rb = rows_a[dataset], rows_b[dataset]
        if ra.best is None or rb.best is None:
            lines.append(f"{dataset:<16} (failed rows, no comparison)")
            continue
        d_best = ra.best - rb.best
        d_avg = ra.avg - rb.avg
        if round(d_avg, 12) > 0:
            better += 1
        elif round(d_avg, 12) < 0:
            worse += 1
        else:
            tied += 1
        lines.append(f"{dataset:<16} {ra.best:>6d} {rb.best:>6d} {d_best:>+7d} "
                     f"{ra.avg:>8.3f} {rb.avg:>8.3f} {d_avg:>+8.3f}")
    lines.append(f"Avg deltas: {a_name} better on {better}, tied on {tied}, "
                 f"worse on {worse} of {better + tied + worse} datasets.")
    return "\n".join(lines) + "\n"
