"""Tests for the command-line interface."""

import json

import pytest
from loguru import logger
from typer.testing import CliRunner

from ydhopf import __version__
from ydhopf.cli import app

runner = CliRunner()

A3 = '{"family": "A_p", "p": 3}'


@pytest.fixture(autouse=True)
def reset_logging():
    yield
    logger.remove()


class TestGlobalOptions:
    def test_version(self):
        result = runner.invoke(app, ["--version"])
        assert result.exit_code == 0
        assert f"ydhopf version {__version__}" in result.output

    def test_config_save(self, tmp_path):
        path = tmp_path / "saved.json"
        result = runner.invoke(app, ["--threads", "2", "config", "--save", str(path)])
        assert result.exit_code == 0
        assert json.loads(path.read_text())["verification"]["threads"] == 2


class TestBuildAndVerify:
    def test_build_to_stdout(self):
        result = runner.invoke(app, ["build", A3])
        assert result.exit_code == 0
        assert '"dim": 9' in result.output

    def test_build_from_stdin(self):
        result = runner.invoke(app, ["build", "-"], input=A3)
        assert result.exit_code == 0
        assert '"conductor": 3' in result.output

    def test_verify_saved_dump(self, tmp_path):
        dump = tmp_path / "a3.json"
        assert runner.invoke(app, ["build", A3, "--json", str(dump)]).exit_code == 0
        report = tmp_path / "report.json"
        result = runner.invoke(app, ["verify", str(dump), "--json", str(report)])
        assert result.exit_code == 0
        data = json.loads(report.read_text())
        assert data["ok"] is True
        assert all(check["name"].startswith("axioms: ") for check in data["checks"])

    def test_invalid_recipe(self):
        result = runner.invoke(app, ["build", '{"family": "A_q"}'])
        assert result.exit_code == 2
        assert "Invalid recipe" in result.output

    def test_missing_file(self):
        result = runner.invoke(app, ["verify", "no-such-recipe.json"])
        assert result.exit_code == 2

    def test_conductor_must_be_a_multiple(self):
        result = runner.invoke(app, ["--conductor", "4", "build", A3])
        assert result.exit_code == 2


class TestClassify:
    def test_bp(self, tmp_path):
        out = tmp_path / "bp.json"
        result = runner.invoke(app, ["classify", "--bp", "3", "--json", str(out)])
        assert result.exit_code == 0
        assert "4 classes" in result.output
        assert json.loads(out.read_text())["orbit_lengths"] == [4, 4, 2, 2]

    def test_dim_p2(self):
        result = runner.invoke(app, ["classify", "--dim-p2", "3"])
        assert result.exit_code == 0
        assert "6 classes" in result.output

    def test_needs_exactly_one_option(self):
        assert runner.invoke(app, ["classify"]).exit_code == 2
        assert runner.invoke(app, ["classify", "--bp", "3", "--dim-p2", "3"]).exit_code == 2


class TestOtherCommands:
    def test_screen_pq(self, tmp_path):
        out = tmp_path / "screen.json"
        result = runner.invoke(app, ["screen-pq", "--q", "7", "--json", str(out)])
        assert result.exit_code == 0
        assert "5, 11, 17, 23, 31, 59" in result.output
        assert json.loads(out.read_text())["exceptions"] == [5, 11, 17, 23, 31, 59]

    def test_isomorphic(self):
        first = '{"family": "B_p", "p": 3, "a": 1, "b": 1}'
        same = '{"family": "B_p", "p": 3, "a": 2, "b": 2}'
        other = '{"family": "B_p", "p": 3, "a": 1, "b": 2}'
        assert runner.invoke(app, ["isomorphic", first, same]).exit_code == 0
        assert runner.invoke(app, ["isomorphic", first, other]).exit_code == 1

    def test_decompose_round_trip(self, tmp_path):
        out = tmp_path / "decomposition.json"
        result = runner.invoke(app, ["decompose", '{"family": "A_p", "p": 3, "m": 2, "n": 1}', "--json", str(out)])
        assert result.exit_code == 0
        assert json.loads(out.read_text())["round_trip"] is True

    def test_isomorphic_a_p(self):
        first = '{"family": "A_p", "p": 3, "m": 1, "n": 1}'
        other = '{"family": "A_p", "p": 3, "m": 2, "n": 1}'
        assert runner.invoke(app, ["isomorphic", first, first]).exit_code == 0
        assert runner.invoke(app, ["isomorphic", first, other]).exit_code == 1

    def test_clifford_suggests_a_conductor(self):
        result = runner.invoke(app, ["clifford", '{"family": "A_p", "p": 3, "n": 1}'])
        assert result.exit_code == 2
        assert "--conductor 9" in result.output
