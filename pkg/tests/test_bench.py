import json
import statistics

import pytest

from swarmclique import Clique, Graph, to_edge_list
from swarmclique.bench import (BenchmarkReport, DatasetError, DatasetSpec,
                               ReportRow, SuiteConfig, compare, emit_report,
                               raw_log, run_suite)


def write_complete_graph(tmp_path, n, name="kn"):
    g = Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    path = tmp_path / f"{name}.edges"
    path.write_text(to_edge_list(g))
    return path


def small_suite(tmp_path, **kwargs):
    path = write_complete_graph(tmp_path, 8, "k8")
    defaults = dict(datasets=[DatasetSpec("k8", path)],
                    algorithms=("aco_pso",), runs=3, iterations=20,
                    base_seed=100)
    defaults.update(kwargs)
    return SuiteConfig(**defaults)


class TestRunSuite:
    def test_complete_graph_best_and_zero_std(self, tmp_path):
        report = run_suite(small_suite(tmp_path))
        row = report.rows[0]
        assert row.best == 8
        assert row.avg == 8.0
        assert row.std == 0.0
        assert row.run_bests == [8, 8, 8]
        assert not row.failures

    def test_seed_discipline(self, tmp_path):
        report = run_suite(small_suite(tmp_path))
        assert [o.seed for o in report.raw] == [100, 101, 102]

    def test_rerun_reproduces_raw_records(self, tmp_path):
        suite = small_suite(tmp_path)
        a = run_suite(suite)
        b = run_suite(suite)
        assert (emit_report(a, "json", include_runtime=False)
                == emit_report(b, "json", include_runtime=False))

    def test_aggregation_matches_recomputation_from_emitted_json(self, tmp_path):
        suite = small_suite(tmp_path, iterations=10, runs=4)
        report = run_suite(suite)
        payload = json.loads(emit_report(report, "json"))
        for row in payload["rows"]:
            bests = [o["best_size"] for o in payload["raw"]
                     if o["dataset"] == row["dataset"]
                     and o["algorithm"] == row["algorithm"]
                     and o["error"] is None]
            assert row["best"] == max(bests)
            assert row["avg"] == pytest.approx(statistics.fmean(bests))
            assert row["std"] == pytest.approx(statistics.pstdev(bests))

    def test_mixed_run_bests_aggregation(self, tmp_path, monkeypatch):
        sizes = {200: 5, 201: 5, 202: 4}

        def fake_run(graph, cfg, backend=None):
            members = tuple(range(sizes[cfg.seed]))
            from swarmclique.solver import RunRecord
            return RunRecord(best=Clique.of(graph, members), trace=[],
                             wall_time=0.0, config=cfg, seed_used=cfg.seed)

        monkeypatch.setattr("swarmclique.bench.run", fake_run)
        path = write_complete_graph(tmp_path, 5, "k5")
        suite = SuiteConfig(datasets=[DatasetSpec("k5", path)], runs=3,
                            iterations=5, base_seed=200)
        row = run_suite(suite).rows[0]
        assert row.best == 5
        assert row.avg == pytest.approx(14.0 / 3.0)
        assert row.std == pytest.approx(statistics.pstdev([5, 5, 4]))

    def test_failed_run_is_annotated_not_dropped(self, tmp_path, monkeypatch):
        from swarmclique.solver import run as real_run

        def flaky_run(graph, cfg, backend=None):
            if cfg.seed == 101:
                raise RuntimeError("injected failure")
            return real_run(graph, cfg, backend=backend)

        monkeypatch.setattr("swarmclique.bench.run", flaky_run)
        report = run_suite(small_suite(tmp_path))
        row = report.rows[0]
        assert row.run_bests == [8, 8]
        assert len(row.failures) == 1
        assert "run 1" in row.failures[0] and "injected failure" in row.failures[0]
        failed = [o for o in report.raw if o.error is not None]
        assert len(failed) == 1 and failed[0].seed == 101

    def test_dataset_parse_failure_aborts_with_name(self, tmp_path):
        bad = tmp_path / "bad.edges"
        bad.write_text("0 1 2\n")
        suite = SuiteConfig(datasets=[DatasetSpec("broken", bad)], runs=1)
        with pytest.raises(DatasetError, match="broken"):
            run_suite(suite)

    def test_oracle_annotation(self, tmp_path):
        suite = small_suite(tmp_path, oracle_check=True)
        row = run_suite(suite).rows[0]
        assert row.optimum == 8
        assert row.optimum_exact is True
        assert row.gap is False

    def test_parallel_equals_sequential(self, tmp_path):
        seq = run_suite(small_suite(tmp_path, workers=1, collect_traces=True))
        par = run_suite(small_suite(tmp_path, workers=2, collect_traces=True))
        assert (emit_report(seq, "json", include_runtime=False)
                == emit_report(par, "json", include_runtime=False))
        assert raw_log(seq) == raw_log(par)

    def test_validation_errors(self, tmp_path):
        with pytest.raises(ValueError, match="at least one dataset"):
            run_suite(SuiteConfig(datasets=[]))
        path = write_complete_graph(tmp_path, 3)
        with pytest.raises(ValueError, match="unknown algorithms"):
            run_suite(SuiteConfig(datasets=[DatasetSpec("a", path)],
                                  algorithms=("simulated_annealing",)))
        with pytest.raises(ValueError, match="duplicate"):
            run_suite(SuiteConfig(datasets=[DatasetSpec("a", path),
                                            DatasetSpec("a", path)]))

    def test_per_dataset_overrides(self, tmp_path):
        suite = small_suite(tmp_path, overrides={"k8": {"ants": 2}},
                            collect_traces=True)
        report = run_suite(suite)
        assert report.rows[0].best == 8  # still solves K8


def synthetic_report(rows, algorithms=("aco_pso",)):
    return BenchmarkReport(rows=rows, raw=[], algorithms=algorithms,
                           environment={"platform": "test", "python": "3",
                                        "package": "0",
                                        "std_convention": "population standard "
                                        "deviation over per-run bests"})


def paper_style_row(dataset, best, avg, std, rt, algorithm="aco_pso"):
    return ReportRow(dataset=dataset, algorithm=algorithm, best=best, avg=avg,
                     std=std, mean_run_time=rt, run_bests=[], failures=[])


class TestEmitReport:
    def test_markdown_columns_and_determinism(self, tmp_path):
        report = run_suite(small_suite(tmp_path))
        text = emit_report(report, "markdown")
        assert "| Graph | Best | Avg | Std | Run-time |" in text
        assert emit_report(report, "markdown") == text

    def test_csv_single_algorithm_matches_table_layout(self):
        report = synthetic_report([paper_style_row("I", 5, 4.995, 0.070, 11.84)])
        text = emit_report(report, "csv")
        lines = text.splitlines()
        assert lines[0] == "graph,best,avg,std,run_time"
        assert lines[1] == "I,5,4.995,0.070,11.84"

    def test_csv_multi_algorithm_prepends_algorithm_column(self):
        rows = [paper_style_row("I", 5, 4.995, 0.070, 11.84, "aco_pso"),
                paper_style_row("I", 5, 4.991, 0.082, 64.03, "aco_quality_gap")]
        report = synthetic_report(rows, ("aco_pso", "aco_quality_gap"))
        lines = emit_report(report, "csv").splitlines()
        assert lines[0] == "algorithm,graph,best,avg,std,run_time"
        assert lines[1].startswith("aco_pso,I,5,")

    def test_csv_quotes_commas(self):
        report = synthetic_report([paper_style_row("a,b", 3, 3.0, 0.0, 1.0)])
        assert '"a,b",3,3.000,0.000,1.00' in emit_report(report, "csv")

    def test_runtime_suppression_drops_wall_clock(self):
        report = synthetic_report([paper_style_row("I", 5, 4.995, 0.070, 11.84)])
        text = emit_report(report, "csv", include_runtime=False)
        assert "run_time" not in text and "11.84" not in text

    def test_json_stable_and_parseable(self, tmp_path):
        report = run_suite(small_suite(tmp_path))
        a = emit_report(report, "json")
        assert a == emit_report(report, "json")
        payload = json.loads(a)
        assert payload["rows"][0]["dataset"] == "k8"

    def test_unknown_format(self):
        report = synthetic_report([paper_style_row("x", 1, 1.0, 0.0, 0.0)])
        with pytest.raises(ValueError, match="unknown report format"):
            emit_report(report, "xml")

    def test_empty_report_rejected(self):
        with pytest.raises(ValueError):
            emit_report(synthetic_report([]), "csv")

    def test_rounding_follows_table_precision(self):
        report = synthetic_report([paper_style_row("x", 7, 5.84321, 0.66789, 105.114)])
        line = emit_report(report, "csv").splitlines()[1]
        assert line == "x,7,5.843,0.668,105.11"


class TestCompare:
    def test_identical_reports_all_zero(self):
        a = synthetic_report([paper_style_row("karate", 5, 4.995, 0.07, 1.0)])
        text = compare(a, a)
        assert "+0.000" in text
        assert "better on 0, tied on 1, worse on 0" in text

    def test_row_two_avg_delta(self):
        pso = synthetic_report([paper_style_row("II", 5, 4.783, 0.412, 23.37)])
        aco = synthetic_report([paper_style_row("II", 5, 4.709, 0.495, 355.81,
                                                "aco_quality_gap")],
                               ("aco_quality_gap",))
        text = compare(pso, aco, "ACO-PSO", "ACO")
        assert "+0.074" in text
        assert "ACO-PSO better on 1" in text

    def test_mismatched_datasets_error(self):
        a = synthetic_report([paper_style_row("x", 1, 1.0, 0.0, 0.0)])
        b = synthetic_report([paper_style_row("y", 1, 1.0, 0.0, 0.0)])
        with pytest.raises(ValueError, match="dataset sets differ"):
            compare(a, b)

    def test_multi_algorithm_report_rejected(self):
        rows = [paper_style_row("x", 1, 1.0, 0.0, 0.0, "aco_pso"),
                paper_style_row("x", 1, 1.0, 0.0, 0.0, "aco_binary")]
        multi = synthetic_report(rows, ("aco_pso", "aco_binary"))
        single = synthetic_report([paper_style_row("x", 1, 1.0, 0.0, 0.0)])
        with pytest.raises(ValueError, match="exactly one algorithm"):
            compare(multi, single)
