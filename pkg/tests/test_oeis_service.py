import logging

import pytest
import requests

from backend.oeis_service import OeisService
from logic.config import CensusSettings
from logic.errors import FixtureExhausted

GOOD_BFILE = "".join(f"{n} {v}\n" for n, v in enumerate([1, 1, 3, 10, 36, 137, 543, 2219, 9285]))


class FakeResponse:
    def __init__(self, text, status_code=200):
        self.text = text
        self.status_code = status_code

    def raise_for_status(self):
        if self.status_code >= 400:
            raise requests.HTTPError(f"{self.status_code} error")


class FakeSession:
    def __init__(self, response=None, error=None):
        self.response = response
        self.error = error
        self.calls = []

    def get(self, url, timeout=None):
        self.calls.append((url, timeout))
        if self.error is not None:
            raise self.error
        return self.response


@pytest.fixture
def settings(tmp_path, monkeypatch):
    monkeypatch.setenv("WTCENSUS_CACHE_DIR", str(tmp_path / "cache"))
    monkeypatch.setenv("WTCENSUS_TIMEOUT", "3")
    return CensusSettings(load_env_file=False)


def test_bundled_fixture_agrees_to_30(settings):
    comparison = OeisService(settings, session=FakeSession()).run(30)
    assert comparison.matches
    assert comparison.checked_up_to == 30
    assert comparison.source.startswith("fixture ")


def test_truncated_fixture_is_exhausted(settings, tmp_path):
    fixture = tmp_path / "short.txt"
    fixture.write_text("".join(f"{n} {v}\n" for n, v in enumerate([1, 1, 3, 10, 36, 137])))
    with pytest.raises(FixtureExhausted) as excinfo:
        OeisService(settings, session=FakeSession()).run(8, fixture=fixture)
    assert excinfo.value.last_index == 5
    assert str(excinfo.value) == "fixture exhausted at 5"


def test_fixture_starting_past_zero_has_no_a0(settings, tmp_path):
    fixture = tmp_path / "offset.txt"
    fixture.write_text("1 1\n2 3\n3 10\n")
    with pytest.raises(FixtureExhausted) as excinfo:
        OeisService(settings, session=FakeSession()).run(3, fixture=fixture)
    assert excinfo.value.last_index == -1
    assert str(excinfo.value) == "fixture has no a(0)"


def test_mismatch_is_reported(settings, tmp_path):
    fixture = tmp_path / "wrong.txt"
    fixture.write_text("0 1\n1 1\n2 4\n3 10\n")
    comparison = OeisService(settings, session=FakeSession()).run(3, fixture=fixture)
    assert not comparison.matches
    assert comparison.first_mismatch == (2, 3, 4)
    assert comparison.to_dict()['first_mismatch'] == {'index': 2, 'computed': "3", 'listed': "4"}


def test_fetch_writes_the_cache(settings):
    session = FakeSession(FakeResponse(GOOD_BFILE))
    service = OeisService(settings, session=session)
    comparison = service.run(8, fetch=True)
    assert comparison.matches
    assert comparison.source == f"fetched {settings.oeis_url}"
    assert session.calls == [(settings.oeis_url, 3)]
    assert settings.bfile_cache_path.read_text() == GOOD_BFILE


def test_network_failure_falls_back_to_fixture(settings, caplog):
    session = FakeSession(error=requests.ConnectionError("offline"))
    service = OeisService(settings, session=session)
    with caplog.at_level(logging.WARNING, logger="backend.oeis_service"):
        comparison = service.run(30, fetch=True)
    assert comparison.matches
    assert comparison.source.startswith("fixture ")
    assert "using the fixture" in caplog.text
    assert service.usage_tracking == {'fetches': 1, 'fallbacks': 1}


def test_http_error_falls_back_to_cache(settings):
    settings.bfile_cache_path.parent.mkdir(parents=True)
    settings.bfile_cache_path.write_text(GOOD_BFILE)
    service = OeisService(settings, session=FakeSession(FakeResponse("", status_code=503)))
    comparison = service.run(8, fetch=True)
    assert comparison.matches
    assert comparison.source == f"cache {settings.bfile_cache_path}"
