"""
Integer partitions, power notation and the factor N(lambda) used by the
passport formulas for ordinary trees.

A partition is kept as a weakly decreasing tuple of positive parts. The empty
partition exists only as the partition of 0.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Tuple

from .errors import PartitionError, PassportMismatch
from .utils import factorial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def power_notation(self) -> Dict[int, int]:
        return power_notation(self)

    def power_text(self) -> str:
        return " ".join(f"{part}^{count}" for part, count in power_notation(self).items())

    def __str__(self) -> str:
        return ",".join(str(part) for part in self.parts)


@dataclass(frozen=True)
class Passport:
    alpha: Partition
    beta: Partition

    def __post_init__(self):
        if self.alpha.n != self.beta.n:
            raise PassportMismatch(
                f"Passport halves sum to different weights: {self.alpha.n} and {self.beta.n}"
            )

    @property
    def n(self) -> int:
        return self.alpha.n

    def __str__(self) -> str:
        return f"{self.alpha}/{self.beta}"


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate parts and store them weakly decreasing"""
    parts = list(parts)
    for part in parts:
        if isinstance(part, bool) or not isinstance(part, int):
            raise PartitionError(f"Partition parts must be integers, got {part!r}")
        if part < 1:
            raise PartitionError(f"Partition parts must be positive, got {part}")
    return Partition(tuple(sorted(parts, reverse=True)))


def make_passport(alpha: Iterable[int], beta: Iterable[int]) -> Passport:
    return Passport(make_partition(alpha), make_partition(beta))


def power_notation(p: Partition) -> Dict[int, int]:
    """Multiplicity d_i of every part size i, largest part first"""
    counts = Counter(p.parts)
    return {part: counts[part] for part in sorted(counts, reverse=True)}


def big_n(p: Partition) -> Fraction:
    """
    N(lambda) = (k-1)! / (d_1! d_2! ... d_n!) as an exact rational.

    The value is not integral in general (N(1^n) = 1/n); only the products
    used by the passport formulas are counts.
    """
    if p.k == 0:
        raise PartitionError("N(lambda) is undefined for the empty partition")
    denominator = 1
    for multiplicity in power_notation(p).values():
        denominator *= factorial(multiplicity)
    return Fraction(factorial(p.k - 1), denominator)


def _partitions_bounded(n: int, largest: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


def partitions_of(n: int) -> Iterator[Partition]:
    """Every partition of n once, in reverse-lexicographic order"""
    if n < 0:
        raise PartitionError(f"Cannot partition a negative number: {n}")
    for parts in _partitions_bounded(n, n):
        yield Partition(parts)


def partition_count(n: int) -> int:
    """p(n) through Euler's pentagonal-number recurrence"""
    if n < 0:
        return 0
    counts: List[int] = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        j = 1
        while True:
            pentagonal = j * (3 * j - 1) // 2
            if pentagonal > m:
                break
            sign = 1 if j % 2 == 1 else -1
            total += sign * counts[m - pentagonal]
            second = j * (3 * j + 1) // 2
            if second <= m:
                total += sign * counts[m - second]
            j += 1
        counts[m] = total
    return counts[n]


def passports_of(n: int) -> Iterator[Passport]:
    """All pairs (alpha, beta) of partitions of n, alpha in the outer loop"""
    partitions = list(partitions_of(n))
    for alpha in partitions:
        for beta in partitions:
            yield Passport(alpha, beta)
