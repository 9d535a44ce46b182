"""Tests for configuration defaults and output path resolution."""

import inspect
from pathlib import Path

from simplex_hlrc.algebra.codes import iter_codewords
from simplex_hlrc.config import (
    ENUMERATION_CAP,
    EXACT_EQUIVALENCE_LIMIT,
    OUTPUT_DIR_ENV,
    Config,
)
from simplex_hlrc.locality.classifier import matches_type


def test_relative_output_uses_env_directory(tmp_path, monkeypatch):
    monkeypatch.setenv(OUTPUT_DIR_ENV, str(tmp_path))
    config = Config()
    assert config.resolve_output(Path("G.txt")) == tmp_path / "G.txt"
    assert config.resolve_output(tmp_path / "x" / "G.txt") == tmp_path / "x" / "G.txt"


def test_relative_output_defaults_to_cwd(tmp_path, monkeypatch):
    monkeypatch.delenv(OUTPUT_DIR_ENV, raising=False)
    monkeypatch.chdir(tmp_path)
    assert Config().resolve_output(Path("G.txt")) == tmp_path / "G.txt"


def test_ensure_directories(tmp_path):
    config = Config(
        db_path=tmp_path / "data" / "runs.db",
        config_path=tmp_path / "conf" / "config.toml",
    )
    config.ensure_directories()
    assert (tmp_path / "data").is_dir()
    assert (tmp_path / "conf").is_dir()


def test_config_holds_paths_only(tmp_path):
    config = Config(db_path=tmp_path / "runs.db", output_dir=tmp_path)
    assert set(vars(config)) == {"db_path", "config_path", "output_dir"}


def test_caps_are_keyword_defaults():
    cap = inspect.signature(iter_codewords).parameters["cap"]
    assert cap.default == ENUMERATION_CAP
    limit = inspect.signature(matches_type).parameters["exact_limit"]
    assert limit.default == EXACT_EQUIVALENCE_LIMIT
