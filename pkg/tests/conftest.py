"""Shared fixtures for the ydhopf test suite."""

import pytest

from ydhopf.algebra.cyclonum import get_field
from ydhopf.config.settings import Settings
from ydhopf.core import YDHopfEngine
from ydhopf.recipe import parse_recipe
from ydhopf.utils.cache import build_cache


@pytest.fixture(autouse=True)
def isolated_environment(tmp_path, monkeypatch):
    """Keep log files and configuration away from the user's home."""
    monkeypatch.setenv("XDG_CACHE_HOME", str(tmp_path / "cache"))
    for name in ("YDH_ARITHMETIC__CONDUCTOR", "YDH_VERIFICATION__THREADS", "YDH_UI__LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)
    yield
    build_cache.clear_cache()


@pytest.fixture
def F3():
    return get_field(3)


@pytest.fixture
def F9():
    return get_field(9)


@pytest.fixture
def settings():
    return Settings()


@pytest.fixture
def engine(settings):
    return YDHopfEngine(settings)


@pytest.fixture
def recipe():
    """Parse a recipe from keyword arguments."""
    import json

    def make(**fields):
        return parse_recipe(json.dumps(fields))

    return make
