"""End-to-end tests for the command-line interface."""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np
import pytest
import yaml

from wqsdc.cli import build_parser, main


def read_rows(path: Path) -> list[dict[str, str]]:
    with open(path, encoding="utf-8", newline="") as f:
        return list(csv.DictReader(f))


class TestParser:
    def test_subcommands(self):
        args = build_parser().parse_args(["figures", "fig2", "--n-max", "5"])
        assert args.command == "figures"
        assert args.n_max == 5

    def test_config_defaults_reach_subcommand(self):
        parser = build_parser({"run": {"seed": 11, "format": "yaml"}})
        args = parser.parse_args(["run"])
        assert args.seed == 11
        assert args.format == "yaml"

    def test_help_exits_zero(self, capsys):
        assert main(["--help"]) == 0
        assert "selfcheck" in capsys.readouterr().out

    def test_unknown_command(self):
        assert main(["teleport"]) == 2


class TestRunCommand:
    """Tests for `wqsdc run`."""

    def test_writes_transcript(self, out_dir: Path, capsys):
        code = main(["run", "--out", str(out_dir), "--max-retries", "200", "--seed", "3"])
        assert code == 0
        data = json.loads((out_dir / "transcript.json").read_text(encoding="utf-8"))
        assert data["outcome"] == "succeeded"
        assert data["fidelity"] == pytest.approx(1.0, abs=1e-12)
        assert "Outcome: succeeded" in capsys.readouterr().out

    def test_transcripts_are_byte_identical(self, tmp_path: Path):
        for name in ("a", "b"):
            assert main(["run", "--out", str(tmp_path / name), "--seed", "5"]) == 0
        first = (tmp_path / "a" / "transcript.json").read_bytes()
        second = (tmp_path / "b" / "transcript.json").read_bytes()
        assert first == second

    def test_bad_triple(self, out_dir: Path):
        argv = ["run", "--out", str(out_dir), "--alpha2", "0.5", "--beta2", "0.5", "--gamma2", "0.5"]
        assert main(argv) == 2
        assert not (out_dir / "transcript.json").exists()

    def test_bad_secret(self, out_dir: Path):
        assert main(["run", "--out", str(out_dir), "--secret", "1,1"]) == 2

    def test_yaml_format_and_dump(self, out_dir: Path):
        dump = out_dir / "state.txt"
        argv = ["--format", "yaml", "run", "--out", str(out_dir), "--dump-state", str(dump)]
        assert main(argv) == 0
        data = yaml.safe_load((out_dir / "transcript.yaml").read_text(encoding="utf-8"))
        assert data["config"]["wparams"]["beta"] == pytest.approx([np.sqrt(0.5), 0.0])
        assert len(dump.read_text(encoding="utf-8").splitlines()) == 16

    def test_config_file(self, out_dir: Path, tmp_path: Path):
        config = tmp_path / "run.yaml"
        config.write_text("alpha2: 0.3\nbeta2: 0.4\ngamma2: 0.3\nmax-retries: 50\n")
        assert main(["--config", str(config), "run", "--out", str(out_dir)]) == 0
        data = json.loads((out_dir / "transcript.json").read_text(encoding="utf-8"))
        assert data["config"]["max_retries"] == 50
        assert data["config"]["wparams"]["alpha"][0] ** 2 == pytest.approx(0.3)

    def test_config_file_unknown_key(self, out_dir: Path, tmp_path: Path):
        config = tmp_path / "run.yaml"
        config.write_text("bogus: 1\n")
        assert main(["--config", str(config), "run", "--out", str(out_dir)]) == 2

    def test_log_file(self, out_dir: Path, tmp_path: Path):
        log = tmp_path / "run.log"
        assert main(["--log-file", str(log), "run", "--out", str(out_dir)]) == 0
        assert "Starting run" in log.read_text(encoding="utf-8")


class TestFiguresCommand:
    """Tests for `wqsdc figures`."""

    def test_fig1(self, out_dir: Path):
        assert main(["figures", "fig1", "--out", str(out_dir)]) == 0
        rows = read_rows(out_dir / "fig1.csv")
        assert len(rows) == 101
        row = min(rows, key=lambda r: abs(float(r["ps"]) - 0.3))
        assert float(row["dbar"]) < 1 / 3

    def test_fig2(self, out_dir: Path):
        assert main(["figures", "fig2", "--n-max", "20", "--out", str(out_dir)]) == 0
        fills = [float(r["fill"]) for r in read_rows(out_dir / "fig2.csv")]
        assert len(fills) == 20
        assert all(b < a for a, b in zip(fills, fills[1:]))

    def test_fig3(self, out_dir: Path):
        assert main(["figures", "fig3", "--beta2", "0.1", "--out", str(out_dir)]) == 0
        rows = read_rows(out_dir / "fig3.csv")
        assert len(rows) == 50
        assert all(0.0 <= float(r["ps"]) <= 1.0 for r in rows)

    def test_fig3_warning(self, out_dir: Path, capsys):
        assert main(["figures", "fig3", "--beta2", "0.5", "--out", str(out_dir)]) == 0
        assert "Warning" in capsys.readouterr().out

    def test_svg(self, out_dir: Path):
        argv = ["figures", "fig2", "--n-max", "5", "--svg", "--out", str(out_dir)]
        assert main(argv) == 0
        assert (out_dir / "fig2.svg").read_text(encoding="utf-8").count("<svg") == 1

    def test_bad_points(self, out_dir: Path):
        assert main(["figures", "fig1", "--points", "1", "--out", str(out_dir)]) == 2


class TestOtherCommands:
    def test_sweep(self, out_dir: Path):
        argv = ["sweep", "--points", "3", "--shots", "200", "--workers", "2", "--out", str(out_dir)]
        assert main(argv) == 0
        rows = read_rows(out_dir / "sweep.csv")
        assert len(rows) == 3
        for row in rows:
            assert float(row["ps_literal"]) == pytest.approx(float(row["ps_analytic"]), abs=1e-9)

    def test_attack(self, out_dir: Path):
        argv = ["attack", "receiver", "--shots", "50", "--out", str(out_dir)]
        assert main(argv) == 0
        data = json.loads((out_dir / "attack_dishonest_receiver.json").read_text(encoding="utf-8"))
        assert data["analytic_mean"] == pytest.approx(0.5, abs=1e-12)

    def test_clone_analysis(self, out_dir: Path):
        argv = ["clone-analysis", "--p", "1", "--q", "1", "--points", "5", "--out", str(out_dir)]
        assert main(argv) == 0
        summary = json.loads(
            (out_dir / "clone_analysis_summary.json").read_text(encoding="utf-8")
        )
        assert summary["closed_form"] == pytest.approx(17 / 27)
        assert summary["difference"] < 1e-9
        assert len(read_rows(out_dir / "clone_analysis.csv")) == 5

    def test_clone_analysis_odd_panels(self, out_dir: Path):
        assert main(["clone-analysis", "--panels", "7", "--out", str(out_dir)]) == 2

    @pytest.mark.slow
    def test_selfcheck(self, out_dir: Path):
        assert main(["selfcheck", "--out", str(out_dir)]) == 0
        data = json.loads((out_dir / "errata.json").read_text(encoding="utf-8"))
        assert data["passed"] is True
        assert len(data["entries"]) >= 6
        assert (out_dir / "errata.txt").read_text(encoding="utf-8").startswith("Self-check: PASS")
