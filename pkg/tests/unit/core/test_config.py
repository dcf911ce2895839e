"""Unit tests for simulation settings."""

import json

import pytest
from pydantic import ValidationError

from name_game.core.config import SimulationSettings, load_mapping


class TestSimulationSettings:
    """Tests for SimulationSettings."""

    def test_settings_defaults(self):
        """Test settings default values."""
        settings = SimulationSettings()
        assert settings.name == "name-game"
        assert settings.debug is False
        assert settings.max_workers == 4
        assert settings.chunk_size == 1 << 16
        assert settings.default_sigma == 1.0
        assert settings.preference_bins == 200

    def test_settings_custom_values(self):
        """Test settings with custom values."""
        settings = SimulationSettings(debug=True, max_workers=2, preference_bins=50)
        assert settings.debug is True
        assert settings.max_workers == 2
        assert settings.preference_bins == 50

    def test_log_level_is_normalized(self):
        """Test log level validation upper-cases valid levels."""
        assert SimulationSettings(log_level="debug").log_level == "DEBUG"

    def test_invalid_log_level(self):
        """Test invalid log level is rejected."""
        with pytest.raises(ValidationError):
            SimulationSettings(log_level="LOUD")

    def test_invalid_worker_count(self):
        """Test worker count must be positive."""
        with pytest.raises(ValidationError):
            SimulationSettings(max_workers=0)

    def test_env_prefix(self, monkeypatch):
        """Test settings are read from NAME_GAME_* variables."""
        monkeypatch.setenv("NAME_GAME_DEFAULT_SIGMA", "0.5")
        monkeypatch.setenv("NAME_GAME_MAX_WORKERS", "3")
        settings = SimulationSettings()
        assert settings.default_sigma == 0.5
        assert settings.max_workers == 3

    def test_to_dict(self):
        """Test conversion to a plain dictionary."""
        data = SimulationSettings().to_dict()
        assert data["name"] == "name-game"
        assert "histogram_bins" in data


class TestSettingsFiles:
    """Tests for loading settings from disk."""

    def test_from_yaml(self, tmp_path):
        """Test loading YAML settings."""
        path = tmp_path / "settings.yaml"
        path.write_text("debug: true\npreference_bins: 64\n")
        settings = SimulationSettings.from_file(path)
        assert settings.debug is True
        assert settings.preference_bins == 64

    def test_from_json(self, tmp_path):
        """Test loading JSON settings."""
        path = tmp_path / "settings.json"
        path.write_text(json.dumps({"histogram_bins": 10}))
        assert SimulationSettings.from_file(path).histogram_bins == 10

    def test_missing_file(self, tmp_path):
        """Test a missing file raises FileNotFoundError."""
        with pytest.raises(FileNotFoundError):
            load_mapping(tmp_path / "absent.yaml")

    def test_unsupported_suffix(self, tmp_path):
        """Test unknown file formats are rejected."""
        path = tmp_path / "settings.toml"
        path.write_text("debug = true\n")
        with pytest.raises(ValueError, match="Unsupported"):
            load_mapping(path)

    def test_non_mapping_content(self, tmp_path):
        """Test a YAML list is not accepted as settings."""
        path = tmp_path / "settings.yaml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(ValueError, match="mapping"):
            load_mapping(path)
