"""Unit tests for run configuration and the simulate pipeline."""

import json

import pytest
from pydantic import ValidationError

from name_game.core.config import SimulationSettings
from name_game.core.exceptions import ConfigurationError
from name_game.core.models import SexFilter, StepMode
from name_game.dynamics.preferences import (
    DweezilPreferences,
    LogNormalPreferences,
    PowerLawPreferences,
)
from name_game.experiment import (
    MANIFEST_NAME,
    FileInitial,
    PowerLawInitial,
    RunConfig,
    initial_from_option,
    load_table_source,
    parse_option,
    preferences_from_option,
    run_simulation,
)


class TestSpecs:
    """Tests for the kind:key=value option strings."""

    def test_keys_and_aliases(self):
        """Test keys are split out and short aliases expanded."""
        assert initial_from_option("powerlaw:t=1.5,n=200") == {
            "kind": "powerlaw",
            "t": "1.5",
            "n_ranks": "200",
        }

    def test_positional_path(self):
        """Test a leading bare segment is the path."""
        assert initial_from_option("file:data/yob2010.txt,sex=F") == {
            "kind": "file",
            "path": "data/yob2010.txt",
            "sex_filter": "F",
        }

    def test_bare_kind(self):
        """Test kinds without arguments."""
        assert preferences_from_option("dweezil") == {"kind": "dweezil"}

    def test_percent_value_kept(self):
        """Test values are passed through for validation later."""
        assert preferences_from_option("lognormal:mode=0.1%,sigma=1")["mode"] == "0.1%"

    @pytest.mark.parametrize("text", [":mode=1%", "lognormal:mode=1%,wide"])
    def test_malformed(self, text):
        """Test missing kinds and stray segments are rejected."""
        with pytest.raises(ConfigurationError):
            parse_option(text)


class TestRunConfig:
    """Tests for RunConfig."""

    def test_defaults(self):
        """Test the default initial table and mode."""
        config = RunConfig(preferences=DweezilPreferences())
        assert config.initial == PowerLawInitial()
        assert config.mode == StepMode.deterministic()
        assert config.steps == 1

    def test_effective_mode_carries_seed(self):
        """Test the run seed is copied into the step mode."""
        config = RunConfig(
            preferences=DweezilPreferences(), mode=StepMode.monte_carlo(10), seed=99
        )
        assert config.effective_mode.seed == 99

    def test_from_option_dicts(self):
        """Test option dictionaries validate into typed models."""
        config = RunConfig.model_validate(
            {
                "initial": initial_from_option("file:t.csv,sex=M"),
                "preferences": preferences_from_option("lognormal:mode=0.1%"),
            }
        )
        assert isinstance(config.initial, FileInitial)
        assert config.initial.sex_filter is SexFilter.M
        assert config.preferences.mode == pytest.approx(0.001)

    def test_manifest_mapping(self):
        """Test a manifest's embedded config is accepted."""
        config = RunConfig.from_mapping(
            {"name": "name-game", "config": {"preferences": {"kind": "dweezil"}, "steps": 3}}
        )
        assert config.steps == 3

    def test_rejects_unknown_fields(self):
        """Test typos in configs are caught."""
        with pytest.raises(ValidationError):
            RunConfig.model_validate({"preferences": {"kind": "dweezil"}, "stpes": 2})

    def test_from_yaml(self, tmp_path):
        """Test configs load from YAML files."""
        path = tmp_path / "run.yaml"
        path.write_text("preferences:\n  kind: lognormal\n  mode: 1%\nsteps: 2\nseed: 4\n")
        config = RunConfig.from_file(path)
        assert config.preferences == LogNormalPreferences(mode=0.01)
        assert config.seed == 4


class TestLoadTableSource:
    """Tests for load_table_source."""

    def test_table_csv(self, table_csv, small_zipf_table):
        """Test CSV tables are read directly."""
        assert load_table_source(table_csv) == small_zipf_table

    def test_ssa_file(self, ssa_file):
        """Test .txt files are parsed as SSA data."""
        assert len(load_table_source(ssa_file, "M")) == 6

    def test_missing(self, tmp_path):
        """Test missing paths raise FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            load_table_source(tmp_path / "none.csv")


class TestRunSimulation:
    """Tests for run_simulation."""

    def test_deterministic_outputs(self, tmp_path, settings):
        """Test tables, diagnostics and manifest are written."""
        config = RunConfig(
            initial=PowerLawInitial(n_ranks=30),
            preferences=LogNormalPreferences(mode=0.01),
            steps=2,
        )
        run = run_simulation(config, settings, tmp_path)
        names = sorted(p.relative_to(tmp_path).as_posix() for p in run.files)
        assert names == [
            "diagnostics.csv",
            MANIFEST_NAME,
            "tables/step_0000.csv",
            "tables/step_0001.csv",
            "tables/step_0002.csv",
        ]
        manifest = json.loads(run.manifest_path.read_text())
        assert manifest["name"] == "name-game"
        assert MANIFEST_NAME not in manifest["outputs"]
        assert RunConfig.from_mapping(manifest) == config.resolved(settings).model_copy(
            update={"output_dir": RunConfig.model_fields["output_dir"].default}
        )

    def test_monte_carlo_histograms(self, tmp_path, settings):
        """Test sampled runs add one histogram per error measure."""
        config = RunConfig(
            initial=PowerLawInitial(n_ranks=40),
            preferences=LogNormalPreferences(mode=0.02),
            mode=StepMode.monte_carlo(200),
            seed=1,
        )
        run = run_simulation(config, settings, tmp_path)
        assert {p.name for p in run.files} >= {
            "outcomes_hist_ratio.csv",
            "outcomes_hist_absdiff.csv",
            "outcomes_hist_relerror.csv",
        }

    def test_zero_steps(self, tmp_path, settings):
        """Test a zero-step run writes only the initial table and manifest."""
        config = RunConfig(preferences=DweezilPreferences(), steps=0)
        run = run_simulation(config, settings, tmp_path)
        assert {p.name for p in run.files} == {"step_0000.csv", MANIFEST_NAME}

    def test_same_seed_same_tables(self, tmp_path, settings):
        """Test seeded runs are reproducible."""
        config = RunConfig(
            initial=PowerLawInitial(n_ranks=40),
            preferences=LogNormalPreferences(mode=0.02),
            mode=StepMode.monte_carlo(200),
            seed=5,
            steps=2,
        )
        a = run_simulation(config, settings, tmp_path / "a")
        b = run_simulation(config, settings, tmp_path / "b")
        assert a.trajectory.tables == b.trajectory.tables

    def test_manifest_records_resolved_defaults(self, tmp_path):
        """Test defaults taken from settings are written into the manifest."""
        settings = SimulationSettings(
            default_sigma=1.5, preference_bins=40, chunk_size=128, histogram_bins=12
        )
        config = RunConfig(
            initial=PowerLawInitial(n_ranks=30),
            preferences=LogNormalPreferences(mode=0.01),
            mode=StepMode.monte_carlo(500),
        )
        run = run_simulation(config, settings, tmp_path)
        recorded = json.loads(run.manifest_path.read_text())["config"]
        assert recorded["preferences"]["sigma"] == 1.5
        assert recorded["preferences"]["bins"] == 40
        assert recorded["preferences"]["floor"] == pytest.approx(0.1 / 500)
        assert recorded["chunk_size"] == 128
        assert recorded["histogram_bins"] == 12

    def test_manifest_replays_under_other_settings(self, tmp_path):
        """Test a manifest replay ignores the ambient preference and chunk defaults."""
        config = RunConfig(
            initial=PowerLawInitial(n_ranks=60),
            preferences=LogNormalPreferences(mode=0.02),
            mode=StepMode.monte_carlo(800),
            seed=9,
            steps=2,
        )
        first = run_simulation(config, SimulationSettings(chunk_size=100), tmp_path / "first")
        replay = RunConfig.from_file(first.manifest_path)
        other = SimulationSettings(
            default_sigma=2.0, preference_bins=13, chunk_size=7, histogram_bins=9, max_workers=3
        )
        second = run_simulation(replay, other, tmp_path / "second")

        def tree(root):
            return {
                p.relative_to(root).as_posix(): p.read_bytes()
                for p in sorted(root.rglob("*"))
                if p.is_file()
            }

        assert tree(first.output_dir) == tree(second.output_dir)

    def test_resolved_keeps_explicit_values(self, settings):
        """Test values given in the config win over settings."""
        config = RunConfig(
            preferences=PowerLawPreferences(t_prime=0.5, floor=1e-3, bins=25),
            chunk_size=11,
        )
        resolved = config.resolved(SimulationSettings(preference_bins=99, chunk_size=5))
        assert resolved.preferences.bins == 25
        assert resolved.chunk_size == 11
        assert resolved.apply(settings).chunk_size == 11
        assert resolved.resolved(settings) == resolved
