import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional, Tuple

import requests

from logic.census import a_rec
from logic.config import BUNDLED_FIXTURE, CensusSettings
from logic.errors import FixtureExhausted
from parsers.bfile_parser import parse_bfile_text

logger = logging.getLogger(__name__)


@dataclass
class OeisComparison:
    source: str
    checked_up_to: int
    first_mismatch: Optional[Tuple[int, int, int]] = None

    @property
    def matches(self) -> bool:
        return self.first_mismatch is None

    def to_dict(self) -> Dict:
        mismatch = None
        if self.first_mismatch is not None:
            index, computed, listed = self.first_mismatch
            mismatch = {'index': index, 'computed': str(computed), 'listed': str(listed)}
        return {
            'status': "PASS" if self.matches else "FAIL",
            'source': self.source,
            'checked_up_to': self.checked_up_to,
            'first_mismatch': mismatch,
        }


class OeisService:
    """Sequence values for A002212 from a local b-file or oeis.org"""

    def __init__(self, settings: Optional[CensusSettings] = None, session=None):
        self.settings = settings or CensusSettings()
        # anything with a requests-style get(url, timeout=...)
        self.session = session if session is not None else requests
        self.usage_tracking = {'fetches': 0, 'fallbacks': 0}

    def load_fixture(self, path: Optional[Path] = None) -> Tuple[str, Dict[int, int]]:
        path = Path(path) if path is not None else BUNDLED_FIXTURE
        logger.debug("Reading b-file %s", path)
        return f"fixture {path}", parse_bfile_text(path.read_text(encoding="utf-8"))

    def fetch(self, fixture: Optional[Path] = None) -> Tuple[str, Dict[int, int]]:
        """
        Download the b-file and refresh the cache. On a network failure fall
        back to the cached copy, then to the fixture.
        """
        url = self.settings.oeis_url
        self.usage_tracking['fetches'] += 1
        try:
            response = self.session.get(url, timeout=self.settings.request_timeout)
            response.raise_for_status()
        except requests.RequestException as e:
            self.usage_tracking['fallbacks'] += 1
            return self._fallback(e, fixture)

        values = parse_bfile_text(response.text)
        self._write_cache(response.text)
        return f"fetched {url}", values

    def _write_cache(self, text: str) -> None:
        cache_path = self.settings.bfile_cache_path
        try:
            cache_path.parent.mkdir(parents=True, exist_ok=True)
            cache_path.write_text(text, encoding="utf-8")
        except OSError as e:
            logger.warning("Could not write b-file cache %s: %s", cache_path, e)

    def _fallback(self, error: Exception, fixture: Optional[Path]) -> Tuple[str, Dict[int, int]]:
        cache_path = self.settings.bfile_cache_path
        if cache_path.exists():
            logger.warning("Fetching %s failed (%s); using cached %s", self.settings.oeis_url, error, cache_path)
            return f"cache {cache_path}", parse_bfile_text(cache_path.read_text(encoding="utf-8"))
        logger.warning("Fetching %s failed (%s); using the fixture", self.settings.oeis_url, error)
        return self.load_fixture(fixture)

    @staticmethod
    def compare(source: str, values: Dict[int, int], max_n: int) -> OeisComparison:
        """Compare a_0..a_max_n with the listed values, stopping at the first mismatch"""
        for n in range(max_n + 1):
            if n not in values:
                raise FixtureExhausted(n - 1)
        computed = a_rec(max_n)
        for n in range(max_n + 1):
            if computed[n] != values[n]:
                return OeisComparison(source, max_n, (n, computed[n], values[n]))
        return OeisComparison(source, max_n)

    def run(self, max_n: int, fixture: Optional[Path] = None, fetch: bool = False) -> OeisComparison:
        source, values = self.fetch(fixture) if fetch else self.load_fixture(fixture)
        return self.compare(source, values, max_n)
