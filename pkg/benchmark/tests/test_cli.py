"""Tests for the command-line interface."""

import argparse
import json
import sys
from pathlib import Path

import pytest

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.harness.csv_io import read_runs_csv
from src.harness.statistics import summarize
from src.main import bounds_rows, format_summary, main, parse_size
from src.models.run_record import RunRecord
from src.problems.dimacs import read_dimacs
from src.problems.maxsat import clause_count


class TestCLI:
    """Test suite for command-line interface."""

    def test_main_no_command(self, capsys):
        """Test that running without command shows help."""
        exit_code = main([])
        captured = capsys.readouterr()

        assert exit_code == 1
        assert "usage:" in captured.out or "usage:" in captured.err

    def test_main_help(self, capsys):
        """Test help flag."""
        with pytest.raises(SystemExit) as exc:
            main(["--help"])

        assert exc.value.code == 0
        captured = capsys.readouterr()
        assert "usage:" in captured.out
        assert "bounds" in captured.out
        assert "sweep" in captured.out

    def test_main_version(self, capsys):
        """Test version flag."""
        with pytest.raises(SystemExit) as exc:
            main(["--version"])

        assert exc.value.code == 0
        captured = capsys.readouterr()
        assert "fastga-bench" in captured.out
        assert "0.3.0" in captured.out

    def test_run_writes_results(self, tmp_path, capsys):
        """run prints a summary table and writes the output directory."""
        out = tmp_path / "out"
        exit_code = main(
            [
                "run",
                "--algorithm",
                "rls",
                "--n",
                "8",
                "2^4",
                "--runs",
                "3",
                "--out",
                str(out),
                "--no-wall-time",
            ]
        )
        captured = capsys.readouterr()

        assert exit_code == 0
        assert "evals/n" in captured.out
        records = read_runs_csv(out / "runs.csv")
        assert len(records) == 6
        assert {r.n for r in records} == {8, 16}
        assert all(r.wall_ms == 0.0 for r in records)
        assert (out / "summary.csv").exists()
        config = json.loads((out / "config.json").read_text())
        assert config["algorithm"]["name"] == "rls"

    def test_run_reproducible(self, tmp_path):
        """Two runs with the same seed write identical runs.csv files."""
        texts = []
        for name in ("a", "b"):
            out = tmp_path / name
            args = ["run", "--n", "32", "--runs", "2", "--seed", "9"]
            assert main([*args, "--out", str(out), "--no-wall-time"]) == 0
            texts.append((out / "runs.csv").read_bytes())
        assert texts[0] == texts[1]

    def test_run_json_format(self, capsys):
        """--format json prints the summary rows."""
        exit_code = main(
            "run --algorithm ollga-onefifth --n 16 --runs 2 --format json".split()
        )
        captured = capsys.readouterr()

        assert exit_code == 0
        (row,) = json.loads(captured.out)
        assert row["algorithm"] == "ollga-onefifth[cap=none]"
        assert row["runs"] == 2
        assert row["mean_evals_per_n"] > 0

    def test_run_budget_warning(self, capsys):
        """Runs stopped by the limit are reported on stderr."""
        exit_code = main(
            "run --algorithm rls --n 512 --runs 1 --max-evaluations 3".split()
        )
        captured = capsys.readouterr()

        assert exit_code == 0
        assert "stopped by the evaluation limit" in captured.err

    def test_run_invalid_workers(self, capsys):
        """--workers 0 is rejected."""
        exit_code = main(["run", "--n", "8", "--workers", "0"])
        captured = capsys.readouterr()

        assert exit_code == 1
        assert "Error:" in captured.err

    def test_run_invalid_config(self, capsys):
        """A static lambda larger than n fails validation."""
        exit_code = main(
            ["run", "--algorithm", "ollga-static", "--lambda", "20", "--n", "8"]
        )
        captured = capsys.readouterr()

        assert exit_code == 1
        assert "Error:" in captured.err

    def test_run_fitdep_on_maxsat(self, capsys):
        """The fitness-dependent lambda is refused on maxsat before any run."""
        exit_code = main(
            ["run", "--algorithm", "ollga-fitdep", "--problem", "maxsat", "--n", "64"]
        )
        captured = capsys.readouterr()

        assert exit_code == 1
        assert "only supports onemax" in captured.err

    def test_sweep(self, tmp_path, capsys):
        """sweep runs every experiment of the file."""
        config = tmp_path / "sweep.json"
        config.write_text(
            json.dumps(
                {
                    "record_wall_time": False,
                    "experiments": [
                        {"algorithm": {"name": "rls"}, "sizes": [8], "runs": 2},
                        {"algorithm": {"name": "opo-ea"}, "sizes": [8], "runs": 2},
                    ],
                }
            )
        )
        out = tmp_path / "out"
        exit_code = main(["sweep", "--config", str(config), "--out", str(out)])
        capsys.readouterr()

        assert exit_code == 0
        records = read_runs_csv(out / "runs.csv")
        assert {r.algorithm for r in records} == {"rls", "opo-ea"}

    def test_sweep_bad_config(self, tmp_path, capsys):
        """An invalid sweep file exits with 1."""
        config = tmp_path / "sweep.json"
        config.write_text(json.dumps({"experiments": [{"sizes": [8]}]}))
        exit_code = main(["sweep", "--config", str(config)])
        captured = capsys.readouterr()

        assert exit_code == 1
        assert "Error:" in captured.err

    def test_bounds_text(self, capsys):
        """bounds prints the progress and runtime cells."""
        exit_code = main(
            ["bounds", "--beta", "2.5", "--u", "1024", "--n", "1024", "--d", "4"]
        )
        captured = capsys.readouterr()

        assert exit_code == 0
        assert "Ω(sqrt(n/d)^-1.5)" in captured.out
        assert "T_F" in captured.out
        assert "evaluation constant" in captured.out
        assert "8200" in captured.out

    def test_bounds_csv(self, capsys):
        """--format csv has a header and one row per quantity."""
        exit_code = main(
            ["bounds", "--beta", "4", "--u", "8", "--n", "64", "--format", "csv"]
        )
        captured = capsys.readouterr()

        assert exit_code == 0
        lines = captured.out.splitlines()
        assert lines[0] == "quantity,expression,regime,value"
        assert any(line.startswith("T_I,O(n·log n)") for line in lines)
        assert not any("constant" in line for line in lines)

    def test_bounds_rows_small_n(self):
        """No runtime rows below n = 3."""
        rows = bounds_rows(2.5, 1, 2, None)
        assert [row[0] for row in rows] == [
            "E[lambda]",
            "iterations lower bound",
            "evaluation constant",
            "iteration constant",
        ]

    def test_bounds_invalid_distance(self, capsys):
        """d outside [1..n] is an error."""
        exit_code = main(
            ["bounds", "--beta", "2.5", "--u", "8", "--n", "64", "--d", "0"]
        )
        captured = capsys.readouterr()

        assert exit_code == 1
        assert "Error:" in captured.err

    def test_probe(self, capsys):
        """probe prints an estimate with its standard error."""
        exit_code = main(
            "probe --algorithm ollga-static --lambda 2 --n 64 --d 8 "
            "--trials 200 --seed 1".split()
        )
        captured = capsys.readouterr()

        assert exit_code == 0
        assert "ollga-static[lambda=2] n=64 d=8: p = " in captured.out
        assert "/200)" in captured.out

    def test_instance(self, tmp_path, capsys):
        """instance writes a planted DIMACS file."""
        out = tmp_path / "inst.cnf"
        exit_code = main(["instance", "--n", "20", "--seed", "4", "--out", str(out)])
        captured = capsys.readouterr()

        assert exit_code == 0
        assert "Wrote" in captured.out
        instance = read_dimacs(out)
        assert instance.n == 20
        assert instance.m == clause_count(20)
        assert instance.is_planted()
        assert out.read_text().startswith("c planted 3-CNF n=20 seed=4")

    def test_instance_too_small(self, tmp_path, capsys):
        """MAX-3SAT needs three variables."""
        exit_code = main(["instance", "--n", "2", "--out", str(tmp_path / "x.cnf")])
        captured = capsys.readouterr()

        assert exit_code == 1
        assert "n >= 3" in captured.err


class TestHelpers:
    """Test suite for CLI helpers."""

    @pytest.mark.parametrize(
        ("text", "value"), [("1024", 1024), ("2^10", 1024), ("3^2", 9)]
    )
    def test_parse_size(self, text, value):
        """Plain integers and powers."""
        assert parse_size(text) == value

    @pytest.mark.parametrize("text", ["0", "-4", "two", "2^x"])
    def test_parse_size_rejects(self, text):
        """Non-positive or malformed sizes."""
        with pytest.raises(argparse.ArgumentTypeError):
            parse_size(text)

    def test_format_summary(self):
        """The table lists every row."""
        records = [
            RunRecord(
                evaluations=40,
                iterations=40,
                best_fitness=8,
                hit_optimum=True,
                algorithm="rls",
                problem="onemax",
                n=8,
            )
        ]
        table = format_summary(summarize(records))
        assert "algorithm" in table
        assert "rls" in table
        assert "5.000" in table
