"""Tests for settings resolution."""

import tempfile
from pathlib import Path

import pytest

from patternmap.base.config import Mode, Settings, Theory, expand_env, get_config
from patternmap.base.errors import ConfigError


def _write_config(tmpdir, content):
    path = Path(tmpdir) / "patternmap.yml"
    path.write_text(content)
    return path


class TestGetConfig:
    def test_value_from_dict(self):
        assert get_config({"mode": "fast"}, "mode", "checked") == "fast"

    def test_env_fallback(self, monkeypatch):
        monkeypatch.setenv("PATTERNMAP_MODE", "fast")
        assert get_config({}, "mode", "checked", "PATTERNMAP_MODE") == "fast"

    def test_default(self, monkeypatch):
        monkeypatch.delenv("PATTERNMAP_MODE", raising=False)
        assert get_config({}, "mode", "checked", "PATTERNMAP_MODE") == "checked"

    def test_env_expansion(self, monkeypatch):
        monkeypatch.setenv("PM_LOG", "/tmp/pm.log")
        assert expand_env("${PM_LOG}") == "/tmp/pm.log"
        assert expand_env("plain") == "plain"


class TestSettings:
    def test_defaults(self, monkeypatch):
        for key in ("PATTERNMAP_MODE", "PATTERNMAP_THEORY", "PATTERNMAP_FORMAT", "PATTERNMAP_LOG_LEVEL"):
            monkeypatch.delenv(key, raising=False)
        settings = Settings.from_dict()
        assert settings.mode is Mode.CHECKED
        assert settings.theory is Theory.COHOMOLOGY
        assert settings.format == "text"

    def test_env_layer(self, monkeypatch):
        monkeypatch.setenv("PATTERNMAP_THEORY", "K")
        assert Settings.from_dict().theory is Theory.K_THEORY

    def test_from_config_file(self, monkeypatch):
        monkeypatch.delenv("PATTERNMAP_FORMAT", raising=False)
        with tempfile.TemporaryDirectory() as tmpdir:
            path = _write_config(tmpdir, "patternmap:\n  mode: fast\n  theory: K\n  format: json\n")
            settings = Settings.from_config(path)
            assert settings.mode is Mode.FAST
            assert settings.theory is Theory.K_THEORY
            assert settings.format == "json"

    def test_missing_file(self):
        with pytest.raises(FileNotFoundError):
            Settings.from_config("/nonexistent/patternmap.yml")

    def test_invalid_values(self):
        with pytest.raises(ConfigError):
            Settings.from_dict({"mode": "sometimes"})
        with pytest.raises(ConfigError):
            Settings.from_dict({"format": "pdf"})

    def test_unknown_key(self):
        with pytest.raises(ConfigError, match="Unknown config keys"):
            Settings.from_dict({"colour": "blue"})

    def test_bad_yaml(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = _write_config(tmpdir, "patternmap: [unclosed\n")
            with pytest.raises(ConfigError):
                Settings.from_config(path)

    def test_override_ignores_none(self):
        settings = Settings.from_dict({"mode": "fast"}).override(mode=None, theory="K")
        assert settings.mode is Mode.FAST
        assert settings.theory is Theory.K_THEORY

    def test_to_dict(self):
        data = Settings.from_dict({"mode": "fast", "theory": "K"}).to_dict()
        assert data["mode"] == "fast"
        assert data["theory"] == "K"
