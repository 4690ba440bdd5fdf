"""Tests for the CLI module."""

import json
import logging
import sys
from pathlib import Path
from unittest.mock import patch

import pytest
import yaml

from warmqaoa.cli import (
    EXIT_ARGUMENT,
    EXIT_CAPACITY,
    EXIT_NUMERICAL,
    EXIT_OK,
    create_parser,
    init_config,
    main,
    select_handler,
    setup_logging,
)
from warmqaoa.config.settings import MAX_QUBITS_ENV
from warmqaoa.config.template import STARTER_CONFIG
from warmqaoa.core.formatter import CSV_HEADER
from warmqaoa.fs.handler import (
    DryRunFileHandler,
    InteractiveFileHandler,
    SilentFileHandler,
)
from warmqaoa.utils.logging import configure_logging

SQUARE = "4 4\n0 1 1\n1 2 1\n2 3 1\n3 0 1\n"


@pytest.fixture(autouse=True)
def workspace(tmp_path, monkeypatch):
    """Run every command inside a scratch directory with logging untouched."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv(MAX_QUBITS_ENV, raising=False)
    with patch("warmqaoa.cli.setup_logging"):
        yield tmp_path


@pytest.fixture
def square_file(workspace):
    path = workspace / "square.txt"
    path.write_text(SQUARE)
    return path


def test_create_parser() -> None:
    """Test parser creation and argument handling."""
    parser = create_parser()

    args = parser.parse_args(["init", "-f"])
    assert args.command == "init"
    assert args.force

    args = parser.parse_args(["run", "-c", "warmqaoa.yaml", "--no-timing"])
    assert args.command == "run"
    assert args.config == "warmqaoa.yaml"
    assert args.no_timing
    assert not args.dry_run
    assert not args.yes

    args = parser.parse_args(["sweep", "--instance", "g.txt"])
    assert args.init == "warmest"
    assert args.resolution == 21
    assert args.rotation == "vertex"

    args = parser.parse_args(["generate", "karloff", "--m", "6", "--b", "1"])
    assert (args.kind, args.m, args.t, args.b) == ("karloff", 6, None, 1)


def test_setup_logging() -> None:
    """Test logging configuration."""
    with patch("warmqaoa.cli.configure_logging") as mock_configure:
        setup_logging(verbose=True)
        mock_configure.assert_called_once_with(logging.DEBUG)
        setup_logging()
        mock_configure.assert_called_with(logging.INFO)


def test_configure_logging_uses_stderr() -> None:
    """Test that log records stay off stdout."""
    with patch("logging.basicConfig") as mock_basic_config:
        configure_logging(logging.DEBUG)
    kwargs = mock_basic_config.call_args.kwargs
    assert kwargs["level"] == logging.DEBUG
    assert kwargs["force"] is True
    assert kwargs["stream"] is sys.stderr


def test_select_handler() -> None:
    parser = create_parser()
    base = ["report", "results.csv"]
    assert isinstance(
        select_handler(parser.parse_args(base + ["--dry-run"])), DryRunFileHandler
    )
    assert isinstance(
        select_handler(parser.parse_args(base + ["-y"])), SilentFileHandler
    )
    assert isinstance(select_handler(parser.parse_args(base)), InteractiveFileHandler)


def test_init_config(workspace) -> None:
    """Test configuration initialization."""
    assert init_config() == EXIT_OK
    config_path = workspace / "warmqaoa.yaml"
    assert config_path.read_text() == STARTER_CONFIG

    config_path.write_text("edited")
    assert init_config() == 1
    assert config_path.read_text() == "edited"

    assert main(["init", "-f"]) == EXIT_OK
    assert config_path.read_text() == STARTER_CONFIG


def test_no_command_prints_help(capsys) -> None:
    assert main([]) == 1
    assert "usage" in capsys.readouterr().out


class TestGenerate:
    """Tests for the generate command."""

    def test_karloff(self, capsys, caplog) -> None:
        with caplog.at_level(logging.INFO):
            assert main(["generate", "karloff", "--m", "6", "--b", "1"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.splitlines()[0] == "20 90"
        assert len(out.splitlines()) == 91
        assert "gw_ratio=0.9123" in caplog.text

    def test_er_to_file(self, workspace) -> None:
        argv = ["generate", "er", "--n", "6", "--p", "0.5", "--seed", "3"]
        assert main(argv + ["--out", "g.txt", "-y"]) == EXIT_OK
        first = (workspace / "g.txt").read_text()
        assert first.startswith("6 ")
        assert main(argv + ["--out", "g.txt", "-y"]) == EXIT_OK
        assert (workspace / "g.txt").read_text() == first

    def test_dry_run_writes_nothing(self, workspace) -> None:
        argv = ["generate", "er", "--n", "4", "--p", "1", "--out", "g.txt"]
        assert main(argv + ["--dry-run"]) == EXIT_OK
        assert not (workspace / "g.txt").exists()

    def test_invalid_weights(self) -> None:
        argv = ["generate", "er", "--n", "4", "--p", "0.5", "--weights", "normal"]
        assert main(argv) == EXIT_ARGUMENT


def test_warmstart(square_file, workspace, capsys) -> None:
    """Test the warm-start report and the angle file."""
    argv = ["warmstart", "--instance", str(square_file), "--attempts", "2"]
    argv += ["--rotations-per-solution", "3", "--angles-out", "angles.json", "-y"]
    assert main(argv) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["rank"] == 2
    assert report["method"] == "bm"
    assert report["bm_objective"] == pytest.approx(4.0, abs=1e-6)
    angles = json.loads((workspace / "angles.json").read_text())
    assert len(angles) == 3
    assert len(angles[0]["theta"]) == 4


def test_warmstart_requires_instance() -> None:
    assert main(["warmstart"]) == EXIT_ARGUMENT


class TestRun:
    """Tests for the run command."""

    def test_no_timing_is_reproducible(self, square_file, capsys) -> None:
        argv = ["run", "--instance", str(square_file), "--variant", "standard"]
        argv += ["--depths", "0,1", "--no-timing"]
        assert main(argv) == EXIT_OK
        first = capsys.readouterr().out
        assert main(argv) == EXIT_OK
        assert capsys.readouterr().out == first
        lines = first.splitlines()
        assert lines[0] == ",".join(CSV_HEADER)
        assert len(lines) == 3
        assert lines[1].split(",")[5:7] == ["2", "0.5"]

    def test_config_file_and_report(self, square_file, workspace, capsys) -> None:
        config = {
            "instance": str(square_file),
            "variants": ["standard", "warmest"],
            "depths": [1],
            "attempts": 2,
            "rotations_per_solution": 1,
            "output": "results.csv",
        }
        (workspace / "warmqaoa.yaml").write_text(yaml.safe_dump(config))
        assert main(["run", "-c", "warmqaoa.yaml", "-y"]) == EXIT_OK
        assert (workspace / "results.csv").exists()
        capsys.readouterr()

        assert main(["report", "results.csv"]) == EXIT_OK
        summary = yaml.safe_load(capsys.readouterr().out)
        assert summary["rows"] == 2
        assert summary["instances"] == 1
        assert set(summary["mean_ar"]) == {"standard", "warmest-r2-vertex"}

    def test_trace_file(self, square_file, workspace, capsys) -> None:
        """Test that --trace writes every optimizer result with its trace."""
        argv = ["run", "--instance", str(square_file), "--variant", "standard,gw"]
        argv += ["--depths", "1,2", "--trace", "trace.json", "-y"]
        assert main(argv) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert sum(1 for line in lines if ",gw," in line) == 2
        records = json.loads((workspace / "trace.json").read_text())
        assert [record["depth"] for record in records] == [1, 2]
        assert all(record["variant"] == "standard" for record in records)
        assert records[1]["best_value"] == max(records[1]["trace"])
        assert len(records[1]["params"]["gamma"]) == 2

    def test_missing_instance(self) -> None:
        assert main(["run", "--variant", "standard"]) == EXIT_ARGUMENT

    def test_bad_variant(self, square_file) -> None:
        argv = ["run", "--instance", str(square_file), "--variant", "qaoa_plus"]
        assert main(argv) == EXIT_ARGUMENT

    def test_degenerate_instance(self, workspace) -> None:
        (workspace / "empty.txt").write_text("3 0\n")
        assert main(["run", "--instance", "empty.txt"]) == EXIT_NUMERICAL

    def test_malformed_instance(self, workspace) -> None:
        (workspace / "bad.txt").write_text("3 1\n0 0 1\n")
        assert main(["run", "--instance", "bad.txt"]) == EXIT_ARGUMENT


def test_report_missing_file() -> None:
    assert main(["report", "missing.csv"]) == EXIT_ARGUMENT


def test_report_rejects_foreign_csv(workspace) -> None:
    (workspace / "other.csv").write_text("a,b\n1,2\n")
    assert main(["report", "other.csv"]) == EXIT_ARGUMENT


def test_karloff_table(capsys) -> None:
    assert main(["karloff-table", "--pairs", "6:1,10:2"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "m,b,nodes,edges,degree,gw_ratio,beta_1"
    assert lines[1] == "6,1,20,90,9,0.9123,-3"
    assert lines[2].split(",")[5] == "0.9402"


def test_karloff_table_bad_pairs() -> None:
    assert main(["karloff-table", "--pairs", "6-1"]) == EXIT_ARGUMENT


class TestSpectrum:
    """Tests for the spectrum command."""

    def test_standard_profile(self, square_file, capsys) -> None:
        argv = ["spectrum", "--instance", str(square_file), "--t-points", "3"]
        assert main(argv) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["n"] == 4
        assert [point["t"] for point in report["points"]] == [0.0, 0.5, 1.0]
        assert report["points"][0]["gap"] == pytest.approx(2.0)
        assert report["points"][0]["stoquastic"]

    def test_warm_profile(self, square_file, capsys) -> None:
        argv = ["spectrum", "--instance", str(square_file), "--init", "warm"]
        assert main(argv + ["--attempts", "1"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert len(report["points"]) == 11
        assert len(report["theta"]) == 4

    def test_too_few_points(self, square_file) -> None:
        argv = ["spectrum", "--instance", str(square_file), "--t-points", "1"]
        assert main(argv) == EXIT_ARGUMENT

    def test_capacity(self, square_file, monkeypatch) -> None:
        monkeypatch.setenv(MAX_QUBITS_ENV, "3")
        assert main(["spectrum", "--instance", str(square_file)]) == EXIT_CAPACITY


def test_sweep(square_file, workspace, capsys) -> None:
    """Test the grid CSV and the statevector dump."""
    argv = ["sweep", "--instance", str(square_file), "--init", "standard"]
    argv += ["--resolution", "3", "--dump-state", "state.bin", "-y"]
    assert main(argv) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 4
    header = lines[0].split(",")
    assert header[0] == "beta\\gamma"
    assert len(header) == 4
    assert float(lines[1].split(",")[1]) == pytest.approx(2.0)
    assert len(Path("state.bin").read_bytes()) == 16 * 16


def test_sweep_warmest_beats_standard(workspace, capsys) -> None:
    """Test the grid ordering on a seeded warm-started instance."""
    argv = ["generate", "er", "--n", "6", "--p", "0.5", "--seed", "7"]
    assert main(argv + ["--out", "g.txt", "-y"]) == EXIT_OK
    best = {}
    for init in ("standard", "warmest"):
        capsys.readouterr()
        argv = ["sweep", "--instance", "g.txt", "--init", init, "--resolution", "11"]
        assert main(argv) == EXIT_OK
        rows = capsys.readouterr().out.splitlines()[1:]
        best[init] = max(float(v) for row in rows for v in row.split(",")[1:])
    assert best["warmest"] >= best["standard"]


def test_sweep_capacity(square_file, monkeypatch) -> None:
    monkeypatch.setenv(MAX_QUBITS_ENV, "2")
    argv = ["sweep", "--instance", str(square_file), "--init", "standard"]
    assert main(argv + ["--resolution", "3"]) == EXIT_CAPACITY


def test_output_goes_through_handler(mock_file_handler) -> None:
    """Test that --out writes via the selected file handler."""
    with patch("warmqaoa.cli.select_handler", return_value=mock_file_handler):
        assert main(["karloff-table", "--pairs", "6:1", "--out", "t.csv"]) == EXIT_OK
    path, content = mock_file_handler.create.call_args.args
    assert path == Path("t.csv")
    assert content.startswith("m,b,nodes")
