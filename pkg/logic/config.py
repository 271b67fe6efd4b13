import os
import logging
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from .errors import ConfigurationError

DEFAULT_OEIS_URL = "https://oeis.org/A002212/b002212.txt"
BUNDLED_FIXTURE = Path(__file__).resolve().parent.parent / "sample_data" / "b002212.txt"


class CensusSettings:
    """Runtime settings read from the environment (and an optional .env file)"""

    def __init__(self, load_env_file: bool = True, env_file: Optional[Path] = None):
        if load_env_file:
            load_dotenv(env_file)

        self.enumeration_bound = self._int_setting("WTCENSUS_BOUND", 8)
        self.passport_bound = self._int_setting("WTCENSUS_PASSPORT_BOUND", 7)
        self.list_bound = self._int_setting("WTCENSUS_LIST_BOUND", 10)
        self.request_timeout = self._int_setting("WTCENSUS_TIMEOUT", 10)
        self.oeis_url = os.getenv("WTCENSUS_OEIS_URL", DEFAULT_OEIS_URL)

        cache_dir = os.getenv("WTCENSUS_CACHE_DIR")
        self.cache_dir = Path(cache_dir) if cache_dir else Path.home() / ".cache" / "wtcensus"

        level_name = os.getenv("WTCENSUS_LOG_LEVEL", "WARNING").upper()
        if not isinstance(logging.getLevelName(level_name), int):
            raise ConfigurationError(f"WTCENSUS_LOG_LEVEL must be a logging level name, got {level_name!r}")
        self.log_level = level_name

    @staticmethod
    def _int_setting(name: str, default: int) -> int:
        raw: Optional[str] = os.getenv(name)
        if raw is None or raw.strip() == "":
            return default
        try:
            value = int(raw)
        except ValueError:
            raise ConfigurationError(f"{name} must be an integer, got {raw!r}")
        if value < 0:
            raise ConfigurationError(f"{name} must be non-negative, got {value}")
        return value

    @property
    def bfile_cache_path(self) -> Path:
        return self.cache_dir / "b002212.txt"
