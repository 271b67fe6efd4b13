import os
from pathlib import Path

import pytest

from logic.config import DEFAULT_OEIS_URL, CensusSettings
from logic.errors import ConfigurationError

KEYS = [
    "WTCENSUS_BOUND", "WTCENSUS_PASSPORT_BOUND", "WTCENSUS_LIST_BOUND", "WTCENSUS_CACHE_DIR",
    "WTCENSUS_OEIS_URL", "WTCENSUS_TIMEOUT", "WTCENSUS_LOG_LEVEL",
]


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for key in KEYS:
        monkeypatch.delenv(key, raising=False)


def test_defaults():
    settings = CensusSettings(load_env_file=False)
    assert settings.enumeration_bound == 8
    assert settings.passport_bound == 7
    assert settings.list_bound == 10
    assert settings.request_timeout == 10
    assert settings.oeis_url == DEFAULT_OEIS_URL
    assert settings.cache_dir == Path.home() / ".cache" / "wtcensus"
    assert settings.log_level == "WARNING"


def test_environment_overrides(monkeypatch, tmp_path):
    monkeypatch.setenv("WTCENSUS_BOUND", "10")
    monkeypatch.setenv("WTCENSUS_CACHE_DIR", str(tmp_path))
    monkeypatch.setenv("WTCENSUS_LOG_LEVEL", "debug")
    settings = CensusSettings(load_env_file=False)
    assert settings.enumeration_bound == 10
    assert settings.bfile_cache_path == tmp_path / "b002212.txt"
    assert settings.log_level == "DEBUG"


def test_dotenv_file_is_loaded(monkeypatch, tmp_path):
    monkeypatch.setattr(os, "environ", dict(os.environ))
    env_file = tmp_path / ".env"
    env_file.write_text("WTCENSUS_LIST_BOUND=4\n")
    assert CensusSettings(env_file=env_file).list_bound == 4


@pytest.mark.parametrize("key, value", [
    ("WTCENSUS_BOUND", "eight"),
    ("WTCENSUS_TIMEOUT", "-1"),
    ("WTCENSUS_LOG_LEVEL", "LOUD"),
])
def test_invalid_values(monkeypatch, key, value):
    monkeypatch.setenv(key, value)
    with pytest.raises(ConfigurationError) as excinfo:
        CensusSettings(load_env_file=False)
    assert key in str(excinfo.value)
    assert isinstance(excinfo.value, ValueError)
