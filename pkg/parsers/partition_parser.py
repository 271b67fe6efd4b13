"""
Partition and passport text forms.

    5,5,3,1          comma list, any order
    5^2 3^1 1^1      power notation, exponents optional (5^2 3 1)
    5,1/3,3          a passport, either half in either form
"""
import re

from logic.errors import PartitionError
from logic.partition import Partition, Passport, make_partition

_POWER_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    stripped = text.strip()
    if not stripped:
        return make_partition([])
    if "," in stripped:
        tokens = [token.strip() for token in stripped.split(",")]
        parts = []
        for token in tokens:
            if not token.isdigit():
                raise PartitionError(f"Invalid partition part {token!r} in {text!r}")
            parts.append(int(token))
        return make_partition(parts)

    parts = []
    for token in stripped.split():
        match = _POWER_TOKEN.match(token)
        if not match:
            raise PartitionError(f"Invalid partition token {token!r} in {text!r}")
        part = int(match.group(1))
        multiplicity = int(match.group(2)) if match.group(2) is not None else 1
        if multiplicity < 1:
            raise PartitionError(f"Multiplicity must be positive in {token!r}")
        parts.extend([part] * multiplicity)
    return make_partition(parts)


def parse_passport(text: str) -> Passport:
    halves = text.split("/")
    if len(halves) != 2:
        raise PartitionError(f"A passport is written alpha/beta, got {text!r}")
    return Passport(parse_partition(halves[0]), parse_partition(halves[1]))
