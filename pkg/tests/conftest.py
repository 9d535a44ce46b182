"""Shared fixtures."""

import pytest
from click.testing import CliRunner

from simplex_hlrc import config
from simplex_hlrc.cli.main import register_commands
from simplex_hlrc.construction.simplex import PuncturedSimplexSpec, punctured_simplex


@pytest.fixture
def code_4_2():
    """S_2(4) - S_2(2), the [12,4,6] running example."""
    return punctured_simplex(2, 4, 2)


@pytest.fixture
def spec_4_2():
    return PuncturedSimplexSpec(2, 4, 2)


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def app(tmp_path, monkeypatch):
    """The CLI group with commands registered and every path under tmp_path."""
    monkeypatch.setenv("SIMPLEX_HLRC_OUTPUT_DIR", str(tmp_path))
    monkeypatch.setattr(config, "DEFAULT_CONFIG_PATH", tmp_path / "config.toml")
    return register_commands()


@pytest.fixture
def db_args(tmp_path):
    return ["--db-path", str(tmp_path / "runs.db")]

