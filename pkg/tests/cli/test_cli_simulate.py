"""Tests for the simulate command."""

import json

from name_game.cli import EXIT_INVALID
from tests.cli.fixtures import invoke, read_csv


class TestSimulateCommand:
    """Test simulate command functionality."""

    def test_deterministic_run(self, tmp_path):
        """Test a deterministic run writes tables, diagnostics and a manifest."""
        out = tmp_path / "run"
        result = invoke(
            "simulate",
            "--initial", "powerlaw:t=1,n=20",
            "--prefs", "dweezil",
            "--steps", "2",
            "--out", str(out),
        )  # fmt: skip
        assert result.exit_code == 0, result.output
        assert "Step Diagnostics" in result.output
        for step in range(3):
            assert (out / "tables" / f"step_{step:04d}.csv").exists()
        diagnostics = read_csv(out / "diagnostics.csv")
        assert diagnostics["spearman"].tolist() == [1.0, 1.0]
        manifest = json.loads((out / "manifest.json").read_text())
        assert manifest["config"]["preferences"]["kind"] == "dweezil"
        assert "output_dir" not in manifest["config"]

    def test_monte_carlo_run(self, tmp_path):
        """Test sampled runs also write parent error histograms."""
        out = tmp_path / "mc"
        result = invoke(
            "simulate",
            "--initial", "powerlaw:t=1,n=100",
            "--prefs", "lognormal:mode=1%,sigma=1",
            "--mode", "monte-carlo",
            "--population", "500",
            "--seed", "3",
            "--out", str(out),
        )  # fmt: skip
        assert result.exit_code == 0, result.output
        for measure in ("ratio", "absdiff", "relerror"):
            hist = read_csv(out / f"outcomes_hist_{measure}.csv")
            assert list(hist.columns) == ["bin_low", "bin_high", "count"]
            assert hist["count"].sum() == 500
        manifest = json.loads((out / "manifest.json").read_text())
        assert manifest["seed"] == 3

    def test_rerun_from_manifest(self, tmp_path):
        """Test a manifest reproduces the run's tables exactly."""
        first = tmp_path / "first"
        invoke(
            "simulate",
            "--initial", "powerlaw:t=1,n=60",
            "--prefs", "lognormal:mode=0.5%",
            "--mode", "monte-carlo",
            "--population", "300",
            "--seed", "7",
            "--steps", "2",
            "--out", str(first),
        )  # fmt: skip
        second = tmp_path / "second"
        result = invoke(
            "simulate", "--run-config", str(first / "manifest.json"), "--out", str(second)
        )
        assert result.exit_code == 0, result.output
        for step in range(3):
            name = f"tables/step_{step:04d}.csv"
            assert (first / name).read_text() == (second / name).read_text()

    def test_file_initial(self, tmp_path, table_csv):
        """Test the initial table can come from a CSV file."""
        out = tmp_path / "from_file"
        result = invoke(
            "simulate",
            "--initial", f"file:{table_csv}",
            "--prefs", "powerlaw:t_prime=0.5,floor=1e-3,bins=50",
            "--out", str(out),
        )  # fmt: skip
        assert result.exit_code == 0, result.output
        assert len(read_csv(out / "tables" / "step_0001.csv")) == 50

    def test_monte_carlo_needs_population(self, tmp_path):
        """Test sampled runs require a population size."""
        result = invoke(
            "simulate", "--prefs", "dweezil", "--mode", "monte-carlo", "--out", str(tmp_path)
        )
        assert result.exit_code == EXIT_INVALID
        assert "--population" in result.output

    def test_unknown_preference_kind(self, tmp_path):
        """Test unknown preference models are rejected."""
        result = invoke("simulate", "--prefs", "gaussian:mode=1%", "--out", str(tmp_path))
        assert result.exit_code == EXIT_INVALID

    def test_zero_steps(self, tmp_path):
        """Test a zero-step run writes only the initial table and the manifest."""
        out = tmp_path / "zero"
        result = invoke(
            "simulate", "--initial", "powerlaw:t=1,n=10", "--prefs", "dweezil",
            "--steps", "0", "--out", str(out),
        )  # fmt: skip
        assert result.exit_code == 0, result.output
        written = sorted(p.relative_to(out).as_posix() for p in out.rglob("*") if p.is_file())
        assert written == ["manifest.json", "tables/step_0000.csv"]

    def test_rerun_under_other_settings(self, tmp_path):
        """Test a manifest replay ignores a settings file with different defaults."""
        first = tmp_path / "first"
        invoke(
            "simulate",
            "--initial", "powerlaw:t=1,n=60",
            "--prefs", "lognormal:mode=0.5%",
            "--mode", "monte-carlo",
            "--population", "400",
            "--seed", "4",
            "--out", str(first),
        )  # fmt: skip
        settings_file = tmp_path / "settings.yaml"
        settings_file.write_text(
            "default_sigma: 2.5\npreference_bins: 17\nchunk_size: 9\nhistogram_bins: 5\n"
        )
        second = tmp_path / "second"
        result = invoke(
            "--config", str(settings_file),
            "simulate", "--run-config", str(first / "manifest.json"), "--out", str(second),
        )  # fmt: skip
        assert result.exit_code == 0, result.output
        for name in ("manifest.json", "tables/step_0001.csv", "outcomes_hist_ratio.csv"):
            assert (first / name).read_bytes() == (second / name).read_bytes()
        recorded = json.loads((first / "manifest.json").read_text())["config"]
        assert recorded["preferences"]["sigma"] == 1.0
