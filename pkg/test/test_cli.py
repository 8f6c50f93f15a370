import json
import multiprocessing
import pytest
from click.testing import CliRunner
from constrained_lcs import solvers
from constrained_lcs.cli.cli import cli
from constrained_lcs.models import Outcome


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def invoke(runner: CliRunner, *args: str):
    return runner.invoke(cli, ["--nproc", "1", *args])


def test_solve_feasible(runner):
    result = invoke(
        runner, "solve", "--x", "abc", "--y", "abc", "--include", "b", "--exclude", "d", "--algo", "cubic"
    )
    assert result.exit_code == 0
    assert "length: 3" in result.output
    assert "lcs: abc" in result.output


def test_solve_infeasible(runner):
    result = invoke(runner, "solve", "--x", "ab", "--y", "ab", "--include", "ab", "--exclude", "a")
    assert result.exit_code == 2
    assert "infeasible" in result.output


def test_solve_json(runner):
    result = invoke(
        runner,
        "solve", "--x", "abab", "--y", "abab", "--include", "ab", "--exclude", "bb",
        "--algo", "quartic", "--format", "json", "--stats",
    )
    assert result.exit_code == 0
    report = json.loads(result.output)
    assert report["feasible"] is True
    assert report["length"] == 3
    assert report["algorithm"] == "quartic"
    assert (report["n"], report["m"], report["s"], report["t"]) == (4, 4, 2, 2)
    assert report["stats"]["table_updates"]["f"] == 4 * 4 * 3 * 3


def test_solve_reads_fasta_files(runner, tmp_path):
    x_file = tmp_path / "x.fa"
    x_file.write_text(">x sequence\ncab\nac\n")
    result = invoke(
        runner, "solve", "--x-file", str(x_file), "--y", "abcac", "--include", "ba", "--exclude", "cc"
    )
    assert result.exit_code == 0
    assert "lcs: abac" in result.output


@pytest.mark.parametrize(
    "args",
    [
        ["solve", "--x", "ab", "--y", "ab", "--include", "a"],
        ["solve", "--x", "ab", "--y", "ab", "--exclude", "b"],
        ["solve", "--y", "ab", "--include", "a", "--exclude", "b"],
        ["solve", "--x", "ab", "--y", "ab", "--include", "a", "--exclude", "b", "--algo", "fast"],
        ["solve", "--unknown-flag"],
        ["check", "--x", "abc", "--y", "abc", "--include", "b", "--exclude", "d"],
    ],
)
def test_usage_errors_exit_1(runner, args):
    assert invoke(runner, *args).exit_code == 1


def test_missing_constraint_names_reduction(runner):
    result = invoke(runner, "solve", "--x", "ab", "--y", "ab", "--include", "a")
    assert "STR-IC-LCS" in result.output


def test_memory_budget_exceeded_exits_1(runner):
    result = invoke(
        runner, "solve", "--x", "abab", "--y", "abab", "--include", "ab", "--exclude", "bb",
        "--memory-budget", "8",
    )
    assert result.exit_code == 1
    assert "memory budget" in result.output


@pytest.mark.parametrize(
    "candidate,exit_code",
    [("abc", 0), ("abab", 2), ("ac", 2)],
)
def test_check(runner, candidate, exit_code):
    x = "abab" if candidate == "abab" else "abc"
    exclude = "bb" if candidate == "abab" else "d"
    include = "ab" if candidate == "abab" else "b"
    result = invoke(
        runner, "check", "--x", x, "--y", x, "--include", include, "--exclude", exclude,
        "--candidate", candidate,
    )
    assert result.exit_code == exit_code
    assert ("valid: yes" in result.output) == (exit_code == 0)


def test_check_round_trips_solve_report(runner, tmp_path):
    result = invoke(
        runner, "solve", "--x", "cabac", "--y", "abcac", "--include", "ba", "--exclude", "cc",
        "--format", "json", "--stats",
    )
    assert result.exit_code == 0
    report_path = tmp_path / "report.json"
    report_path.write_text(result.output)

    result = invoke(runner, "check", "--report", str(report_path), "--format", "json")
    assert result.exit_code == 0
    assert json.loads(result.output)["valid"] is True


def test_fuzz_without_iterations(runner):
    result = invoke(runner, "fuzz", "--iters", "0")
    assert result.exit_code == 0
    assert "0 ok" in result.output


def test_fuzz_agrees(runner):
    result = invoke(runner, "fuzz", "--seed", "42", "--iters", "60", "--max-n", "8")
    assert result.exit_code == 0
    assert "60 ok" in result.output


def test_fuzz_reports_broken_solver(runner, monkeypatch):
    monkeypatch.setattr(
        solvers, "solve_quartic", lambda instance: Outcome.infeasible("quartic")
    )
    result = invoke(runner, "fuzz", "--seed", "1", "--iters", "40", "--plant-probability", "1.0")
    assert result.exit_code == 3
    assert "MISMATCH seed=1" in result.output


def test_bench_counts(runner):
    result = invoke(runner, "bench", "--n", "12", "--t", "2", "--s", "2,5", "--format", "json")
    assert result.exit_code == 0
    rows = json.loads(result.output)
    assert len(rows) == 4
    quartic = {row["s"]: row for row in rows if row["algorithm"] == "quartic"}
    cubic = [row for row in rows if row["algorithm"] == "cubic"]
    assert quartic[2]["f_updates"] == 12 * 12 * 3 * 3
    assert quartic[5]["f_updates"] * 3 == quartic[2]["f_updates"] * 6
    assert cubic[0]["v_updates"] == cubic[1]["v_updates"] == 12 * 12 * 3
    assert cubic[0]["h_updates"] == cubic[1]["h_updates"] == 12 * 12 * 2


def test_bench_single_symbol_inputs(runner, tmp_path):
    output = tmp_path / "bench.csv"
    result = invoke(runner, "bench", "--n", "1", "--t", "1", "--s", "1", "--output", str(output))
    assert result.exit_code == 0
    assert output.exists()
    assert len(output.read_text().strip().splitlines()) == 3


def test_schema(runner):
    result = invoke(runner, "schema")
    assert result.exit_code == 0
    schema = json.loads(result.output)
    assert schema["title"] == "SolveReport"
    assert "lcs" in schema["properties"]


class InterruptedPool:
    """Stands in for multiprocessing.Pool: one result, then ctrl-c"""

    def __init__(self, processes: int):
        self.processes = processes

    def imap(self, worker, jobs):
        yield worker(jobs[0])
        raise KeyboardInterrupt

    def close(self):
        pass

    def terminate(self):
        pass

    def join(self):
        pass


@pytest.mark.parametrize(
    "args",
    [
        ["fuzz", "--iters", "20"],
        ["bench", "--n", "6", "--t", "2", "--s", "1,2"],
    ],
)
def test_interrupted_pool_exits_1(runner, monkeypatch, args):
    monkeypatch.setattr(multiprocessing, "Pool", InterruptedPool)
    result = runner.invoke(cli, ["--nproc", "4", *args])
    assert result.exit_code == 1
    assert " ok" not in result.output


def test_bench_lengths_are_integers(runner):
    result = invoke(runner, "bench", "--n", "40", "--t", "4", "--s", "4,16", "--format", "json")
    assert result.exit_code == 0
    rows = json.loads(result.output)
    assert all(isinstance(row["length"], int) for row in rows)
    assert all(row["combine_candidates"] > 0 for row in rows)
