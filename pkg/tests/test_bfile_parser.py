import pytest

from logic.census import a_rec
from logic.config import BUNDLED_FIXTURE
from logic.errors import BFileFormatError
from parsers.bfile_parser import parse_bfile, parse_bfile_text


def test_comments_and_blank_lines_are_skipped():
    text = "# A002212\n\n0 1\n1 1   # trailing comment\n2 3\n"
    assert parse_bfile_text(text) == {0: 1, 1: 1, 2: 3}


def test_bundled_fixture_matches_recurrence():
    values = parse_bfile(BUNDLED_FIXTURE.read_text(encoding="utf-8").splitlines())
    assert sorted(values) == list(range(31))
    assert [values[n] for n in range(31)] == a_rec(30)


@pytest.mark.parametrize("text, line", [
    ("0 1\n1\n", 2),
    ("0 1\n1 x\n", 2),
    ("# header\n0 1 2\n", 2),
    ("0 1\n2 3\n", 2),
])
def test_malformed_lines(text, line):
    with pytest.raises(BFileFormatError) as excinfo:
        parse_bfile_text(text)
    assert excinfo.value.line == line
