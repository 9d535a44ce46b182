"""Configuration management for simplex-hlrc."""

import logging
import os
from pathlib import Path

from platformdirs import user_config_path, user_data_path

logger = logging.getLogger(__name__)

# Application name for XDG directories
APP_NAME = "simplex-hlrc"

# Default configuration paths (XDG-compliant)
DEFAULT_DATA_DIR = user_data_path(APP_NAME, ensure_exists=False)
DEFAULT_CONFIG_DIR = user_config_path(APP_NAME, ensure_exists=False)
DEFAULT_DB_PATH = DEFAULT_DATA_DIR / "runs.db"
DEFAULT_CONFIG_PATH = DEFAULT_CONFIG_DIR / "config.toml"

# Only environment override the tool honours
OUTPUT_DIR_ENV = "SIMPLEX_HLRC_OUTPUT_DIR"

# Computational caps
ENUMERATION_CAP = 2**24  # codewords
PERMUTATION_SEARCH_CAP = 14  # coordinates
EXACT_EQUIVALENCE_LIMIT = 12  # coordinates
FLAT_MAX_LENGTH = 64
FLAT_MAX_RANK = 7
LATTICE_PAIR_CHECK_LIMIT = 400  # flats

REPORT_SCHEMA_VERSION = 1


class Config:
    """Application configuration."""

    def __init__(
        self,
        db_path: Path | None = None,
        config_path: Path | None = None,
        output_dir: Path | None = None,
    ):
        """Initialize configuration.

        Args:
            db_path: Path to SQLite run store
            config_path: Path to config file
            output_dir: Directory relative output paths resolve against
        """
        self.db_path = db_path or DEFAULT_DB_PATH
        self.config_path = config_path or DEFAULT_CONFIG_PATH
        env_dir = os.environ.get(OUTPUT_DIR_ENV)
        self.output_dir = output_dir or (Path(env_dir) if env_dir else Path.cwd())

    def ensure_directories(self) -> None:
        """Ensure all required directories exist."""
        self.db_path.parent.mkdir(parents=True, exist_ok=True)
        self.config_path.parent.mkdir(parents=True, exist_ok=True)
        logger.debug(f"Ensured directories exist: {self.db_path.parent}")

    def resolve_output(self, path: Path) -> Path:
        """Resolve an output path against the output directory.

        Args:
            path: User-supplied path

        Returns:
            Absolute paths unchanged, relative ones under ``output_dir``
        """
        if path.is_absolute():
            return path
        return self.output_dir / path


def get_config() -> Config:
    """Get default configuration.

    Returns:
        Config instance with default settings
    """
    return Config()
