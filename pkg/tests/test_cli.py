import json

from swarmclique.cli import cli_main
from swarmclique.datasets import bundled_path

KARATE = str(bundled_path("karate"))
DOLPHINS = str(bundled_path("dolphins"))


def run_cli(capsys, *argv):
    code = cli_main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestInfo:
    def test_karate_counts(self, capsys):
        code, out, _ = run_cli(capsys, "info", KARATE)
        assert code == 0
        assert "34 nodes, 78 edges" in out

    def test_json_format(self, capsys):
        code, out, _ = run_cli(capsys, "info", "--format", "json", DOLPHINS)
        assert code == 0
        payload = json.loads(out)
        assert payload[0]["n"] == 62 and payload[0]["edges"] == 159


class TestSolve:
    def test_deterministic_stdout(self, capsys):
        args = ("solve", "--algo", "aco_pso", "--seed", "7",
                "--iterations", "60", KARATE)
        code1, out1, _ = run_cli(capsys, *args)
        code2, out2, _ = run_cli(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        assert "best clique size:" in out1

    def test_json_output_and_trace(self, capsys, tmp_path):
        trace = tmp_path / "trace.jsonl"
        code, out, _ = run_cli(capsys, "solve", "--format", "json",
                               "--iterations", "40", "--seed", "1",
                               "--trace-out", str(trace), KARATE)
        assert code == 0
        payload = json.loads(out)
        assert payload["best_size"] == 5
        lines = trace.read_text().strip().splitlines()
        assert len(lines) == 40
        assert json.loads(lines[0])["t"] == 1

    def test_solver_config_file(self, capsys, tmp_path):
        cfg = tmp_path / "solver.cfg"
        cfg.write_text("ants = 5\niterations = 30\n")
        code, out, _ = run_cli(capsys, "solve", "--config", str(cfg),
                               "--format", "json", KARATE)
        assert code == 0
        assert json.loads(out)["iterations"] == 30

    def test_out_file(self, capsys, tmp_path):
        dest = tmp_path / "result.txt"
        code, out, _ = run_cli(capsys, "solve", "--iterations", "30",
                               "--out", str(dest), KARATE)
        assert code == 0
        assert out == ""
        assert "best clique size:" in dest.read_text()


class TestExact:
    def test_karate(self, capsys):
        code, out, _ = run_cli(capsys, "exact", KARATE)
        assert code == 0
        assert "maximum clique size: 5 (optimal)" in out

    def test_json(self, capsys):
        code, out, _ = run_cli(capsys, "exact", "--format", "json", DOLPHINS)
        assert code == 0
        payload = json.loads(out)
        assert payload["optimum_size"] == 5 and payload["completed"]


class TestBench:
    def test_markdown_table(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--runs", "2",
                               "--iterations", "30", "--seed", "3", KARATE)
        assert code == 0
        assert "| Graph | Best | Avg | Std | Run-time |" in out
        assert "| karate | 5 |" in out

    def test_no_runtime_deterministic(self, capsys):
        args = ("bench", "--runs", "2", "--iterations", "20", "--seed", "0",
                "--no-runtime", "--format", "csv", KARATE)
        _, out1, _ = run_cli(capsys, *args)
        _, out2, _ = run_cli(capsys, *args)
        assert out1 == out2
        assert "run_time" not in out1

    def test_multiple_algorithms_and_out(self, capsys, tmp_path):
        dest = tmp_path / "report.csv"
        code, out, _ = run_cli(capsys, "bench", "--runs", "1",
                               "--iterations", "20",
                               "--algo", "aco_pso,aco_quality_gap",
                               "--format", "csv", "--out", str(dest), KARATE)
        assert code == 0
        text = dest.read_text()
        assert text.startswith("algorithm,graph,best,avg,std,run_time")

    def test_suite_config_file(self, capsys, tmp_path):
        cfg = tmp_path / "suite.cfg"
        cfg.write_text(
            "runs = 2\niterations = 25\nbase_seed = 4\n"
            "algorithms = aco_pso\n"
            f"[dataset karate]\npath = {KARATE}\nformat = pajek\n")
        code, out, _ = run_cli(capsys, "bench", "--config", str(cfg),
                               "--format", "csv")
        assert code == 0
        assert out.splitlines()[1].startswith("karate,5,")

    def test_raw_out(self, capsys, tmp_path):
        raw = tmp_path / "raw.jsonl"
        code, _, _ = run_cli(capsys, "bench", "--runs", "1",
                             "--iterations", "10", "--raw-out", str(raw), KARATE)
        assert code == 0
        lines = raw.read_text().strip().splitlines()
        assert len(lines) == 10
        row = json.loads(lines[0])
        assert row["dataset"] == "karate" and row["t"] == 1

    def test_oracle_check_column(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--runs", "1",
                               "--iterations", "30", "--oracle-check", KARATE)
        assert code == 0
        assert "Optimum" in out


class TestExitCodes:
    def test_unknown_flag_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "solve", "--bogus", KARATE)
        assert code == 1

    def test_missing_subcommand_is_usage_error(self, capsys):
        assert run_cli(capsys, )[0] == 1

    def test_missing_file_is_data_error(self, capsys):
        code, _, err = run_cli(capsys, "info", "/nonexistent/graph.net")
        assert code == 2
        assert "error" in err.lower()

    def test_malformed_graph_is_data_error(self, capsys, tmp_path):
        bad = tmp_path / "bad.edges"
        bad.write_text("1 2 3\n")
        assert run_cli(capsys, "info", str(bad))[0] == 2

    def test_invalid_solver_value_is_usage_error(self, capsys):
        code, _, _ = run_cli(capsys, "solve", "--iterations", "0", KARATE)
        assert code == 1

    def test_bad_config_file_is_data_error(self, capsys, tmp_path):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("unknown_knob = 3\n")
        code, _, _ = run_cli(capsys, "solve", "--config", str(cfg), KARATE)
        assert code == 2

    def test_conflicting_bench_inputs_usage_error(self, capsys, tmp_path):
        cfg = tmp_path / "suite.cfg"
        cfg.write_text(f"[dataset karate]\npath = {KARATE}\n")
        code, _, _ = run_cli(capsys, "bench", "--config", str(cfg), KARATE)
        assert code == 1


def test_backends_subcommand(capsys):
    code, out, _ = run_cli(capsys, "backends")
    assert code == 0
    assert "pure" in out
