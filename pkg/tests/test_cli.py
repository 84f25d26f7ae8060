"""Command-line interface: subcommands, exit codes, report files."""

import json
import shutil
import subprocess
import sys

import pytest

from betaquad import catalog
from betaquad.cli import run


class TestList:
    def test_sorted_and_complete(self, capsys):
        assert run(["list"]) == 0
        lines = capsys.readouterr().out.strip().split("\n")
        assert len(lines) == catalog.EXPECTED_ENTRY_COUNT
        ids = [line.split()[0] for line in lines]
        assert ids == sorted(ids)

    def test_stable_across_runs(self, capsys):
        run(["list"])
        first = capsys.readouterr().out
        run(["list"])
        second = capsys.readouterr().out
        assert first == second


class TestShow:
    def test_shows_domain_and_citation(self, capsys):
        assert run(["show", "3.457.3"]) == 0
        out = capsys.readouterr().out
        assert "3.457.3" in out
        assert "a" in out and "mu" in out
        assert "range" in out
        assert catalog.entry("3.457.3").citation in out

    def test_unknown_id_exits_2(self, capsys):
        assert run(["show", "definitely-not-there"]) == 2
        assert "error" in capsys.readouterr().err


class TestVerifyCommand:
    def test_single_entry_passes(self, capsys):
        assert run(["verify", "--id", "3.248.3", "--samples", "5", "--seed", "1"]) == 0
        lines = capsys.readouterr().out.strip().split("\n")
        outcomes = [json.loads(line) for line in lines[:-1]]
        assert len(outcomes) == 5
        assert all(o["status"] == "pass" for o in outcomes)
        assert json.loads(lines[-1])["verdict"] == "pass"

    def test_report_file_written(self, tmp_path):
        path = tmp_path / "report.jsonl"
        code = run(
            ["verify", "--id", "eq-4.3", "--samples", "3", "--seed", "2",
             "--report", str(path)]
        )
        assert code == 0
        lines = path.read_text().strip().split("\n")
        assert len(lines) == 4
        assert json.loads(lines[-1])["outcomes"] == 3

    def test_text_format(self, capsys):
        assert run(
            ["verify", "--id", "3.191.3", "--samples", "2", "--format", "text"]
        ) == 0
        out = capsys.readouterr().out
        assert "entry" in out and "3.191.3" in out and "verdict=pass" in out

    def test_invalid_flags_exit_2(self, capsys):
        assert run(["verify", "--rtol", "-1"]) == 2
        assert run(["verify", "--samples", "0"]) == 2
        assert run(["verify", "--jobs", "0"]) == 2
        assert run(["verify", "--atol", "-1e-9"]) == 2
        capsys.readouterr()

    def test_unknown_flag_exits_2(self, capsys):
        assert run(["verify", "--definitely-not-a-flag"]) == 2
        capsys.readouterr()

    def test_unknown_subcommand_exits_2(self, capsys):
        assert run(["frobnicate"]) == 2
        capsys.readouterr()

    def test_unknown_id_exits_2(self, capsys):
        assert run(["verify", "--id", "nope"]) == 2
        assert "error" in capsys.readouterr().err

    def test_failures_exit_1(self, capsys):
        # rtol below the engines' precision floor forces at least one fail
        code = run(
            ["verify", "--id", "3.216.1", "--samples", "5", "--seed", "7",
             "--rtol", "1e-16", "--atol", "1e-16"]
        )
        out = capsys.readouterr().out
        assert code == 1
        assert json.loads(out.strip().split("\n")[-1])["verdict"] == "fail"

    def test_deterministic_reports_across_jobs(self, tmp_path):
        args = ["verify", "--id", "3.217", "--id", "3.313.1", "--samples", "4",
                "--seed", "7"]
        p1, p2, p3 = (tmp_path / n for n in ("a.jsonl", "b.jsonl", "c.jsonl"))
        assert run(args + ["--report", str(p1), "--jobs", "1"]) == 0
        assert run(args + ["--report", str(p2), "--jobs", "1"]) == 0
        assert run(args + ["--report", str(p3), "--jobs", "4"]) == 0
        assert p1.read_bytes() == p2.read_bytes() == p3.read_bytes()


class TestConsoleScript:
    @pytest.mark.skipif(shutil.which("betaquad") is None, reason="script not installed")
    def test_installed_entry_point(self):
        proc = subprocess.run(
            ["betaquad", "verify", "--id", "3.226.1", "--samples", "2"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout.strip().split("\n")[-1])["verdict"] == "pass"

    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "betaquad.cli", "list"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert len(proc.stdout.strip().split("\n")) == catalog.EXPECTED_ENTRY_COUNT


class TestExport:
    def test_writes_catalog_json(self, tmp_path):
        path = tmp_path / "catalog.json"
        assert run(["export", "--out", str(path)]) == 0
        data = json.loads(path.read_text())
        assert len(data) == catalog.EXPECTED_ENTRY_COUNT
        assert data == catalog.catalog_manifest()

    def test_unwritable_path_exits_2(self, capsys, tmp_path):
        assert run(["export", "--out", str(tmp_path / "missing" / "x.json")]) == 2
        assert "error" in capsys.readouterr().err
