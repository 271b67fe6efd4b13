import pytest

from logic.errors import PartitionError, PassportMismatch
from logic.partition import make_partition, make_passport
from parsers.partition_parser import parse_partition, parse_passport


@pytest.mark.parametrize("text, parts", [
    ("5,5,3,1", (5, 5, 3, 1)),
    ("3, 5, 1, 5", (5, 5, 3, 1)),
    ("5^2 3^1 1^1", (5, 5, 3, 1)),
    ("5^2 3 1", (5, 5, 3, 1)),
    ("7", (7,)),
    ("1^4", (1, 1, 1, 1)),
    ("", ()),
])
def test_parse_partition(text, parts):
    assert parse_partition(text).parts == parts


def test_power_text_parses_back():
    p = make_partition([5, 5, 2, 2, 2, 1, 1])
    assert parse_partition(p.power_text()) == p
    assert parse_partition(str(p)) == p


@pytest.mark.parametrize("text", ["5,x", "5,,1", "5^0", "5^", "a b", "0,1"])
def test_parse_partition_errors(text):
    with pytest.raises(PartitionError):
        parse_partition(text)


def test_parse_passport():
    assert parse_passport("5,1/3,3") == make_passport([5, 1], [3, 3])
    assert parse_passport("5^2 2^3 1^2/7 6 4 1").n == 18


def test_parse_passport_errors():
    with pytest.raises(PartitionError):
        parse_passport("5,1")
    with pytest.raises(PassportMismatch):
        parse_passport("5/3")
