"""Tests for configuration loading."""

import json

import pytest
from pydantic import ValidationError

from ydhopf.config.settings import Settings


class TestSettings:
    def test_defaults(self):
        settings = Settings()
        assert settings.arithmetic.conductor is None
        assert settings.verification.exhaustive_threshold == 512
        assert settings.verification.sample_size == 20_000
        assert settings.ui.log_level == "WARNING"

    def test_environment_overrides(self, monkeypatch):
        monkeypatch.setenv("YDH_VERIFICATION__THREADS", "4")
        monkeypatch.setenv("YDH_ARITHMETIC__CONDUCTOR", "9")
        settings = Settings()
        assert settings.verification.threads == 4
        assert settings.arithmetic.conductor == 9

    def test_empty_conductor_means_automatic(self, monkeypatch):
        monkeypatch.setenv("YDH_ARITHMETIC__CONDUCTOR", "0")
        assert Settings().arithmetic.conductor is None

    def test_bounds(self):
        with pytest.raises(ValidationError):
            Settings(verification={"threads": 0})
        with pytest.raises(ValidationError):
            Settings(ui={"log_level": "LOUD"})

    def test_save_and_load(self, tmp_path):
        path = tmp_path / "conf" / "ydhopf.json"
        settings = Settings(verification={"sample_size": 500})
        settings.save_to_file(path)
        assert json.loads(path.read_text())["verification"]["sample_size"] == 500
        assert Settings.from_file(path).verification.sample_size == 500

    def test_missing_file_gives_defaults(self, tmp_path):
        assert Settings.from_file(tmp_path / "absent.json").verification.threads == 1

    def test_cache_dir_follows_xdg(self, tmp_path):
        settings = Settings()
        assert settings.cache_dir == tmp_path / "cache" / "ydhopf"
        assert settings.log_file.name == "ydhopf.log"
