"""
Counting formulas for rooted and unrooted weighted trees, the ordinary-tree
passport formulas, the asymptotic estimate of a_n, and the brute-force
censuses the formulas are checked against.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

import numpy as np
import pandas as pd

from .dyck import enumerate_words, enumerate_words_with_edges
from .errors import BoundExceeded, PassportMismatch
from .partition import Passport, big_n
from .tree import classify, from_dyck, passport
from .utils import as_integer, binomial, format_rational

logger = logging.getLogger(__name__)

ASYMPTOTIC_CONSTANT = 0.5 * math.sqrt(5 / math.pi)
DEFAULT_CHECKPOINTS = (50, 100, 200, 400)


@dataclass(frozen=True)
class CensusRow:
    n: int
    a_n: int
    b_row: Tuple[int, ...]
    c_n: Fraction
    asymptotic_estimate: float

    def to_record(self) -> Dict[str, str]:
        return {
            'n': str(self.n),
            'a_n': str(self.a_n),
            'b_row': " ".join(str(b) for b in self.b_row),
            'c_n': format_rational(self.c_n),
            'asymptotic_estimate': f"{self.asymptotic_estimate:.6g}",
        }


@dataclass(frozen=True)
class PassportTally:
    rooted: int
    mass: Fraction


def a_rec(N: int) -> List[int]:
    """a_0..a_N from a_{n+1} = a_n + sum_k a_k a_{n-k}, n >= 1"""
    if N < 0:
        raise ValueError(f"N must be non-negative, got {N}")
    a = [1, 1][:N + 1]
    for n in range(1, N):
        a.append(a[n] + sum(a[k] * a[n - k] for k in range(n + 1)))
    return a


def catalan(m: int) -> int:
    if m < 0:
        raise ValueError(f"Catalan index must be non-negative, got {m}")
    return binomial(2 * m, m) // (m + 1)


def b_explicit(m: int, n: int) -> int:
    """b_{m,n} = C(n-1, m-1) * Cat_m"""
    if not 1 <= m <= n:
        raise ValueError(f"b_(m,n) needs 1 <= m <= n, got m={m}, n={n}")
    return binomial(n - 1, m - 1) * catalan(m)


def b_row(n: int) -> Tuple[int, ...]:
    return tuple(b_explicit(m, n) for m in range(1, n + 1))


def c_exact(n: int) -> Fraction:
    """Sum over unrooted trees of 1/|Aut(T)|, i.e. sum_m b_{m,n}/m"""
    if n < 1:
        raise ValueError(f"c_n needs n >= 1, got {n}")
    return sum((Fraction(b_explicit(m, n), m) for m in range(1, n + 1)), Fraction(0))


def root_weight_split(N: int) -> List[Tuple[int, int]]:
    """
    For n = 1..N: (rooted trees with root edge of weight 1, with root weight >= 2).
    The first kind is x_1 u y_1 v; the second comes from weight n-1 by adding
    one unit to the root edge.
    """
    a = a_rec(max(N, 0))
    return [
        (sum(a[k] * a[n - 1 - k] for k in range(n)), a[n - 1] if n >= 2 else 0)
        for n in range(1, N + 1)
    ]


def asymptotic_log10(n: int) -> Tuple[float, int]:
    """The estimate as (mantissa, exponent) with mantissa in [1, 10)"""
    if n < 1:
        raise ValueError(f"The estimate needs n >= 1, got {n}")
    log_value = math.log10(ASYMPTOTIC_CONSTANT) + n * math.log10(5) - 1.5 * math.log10(n)
    exponent = math.floor(log_value)
    return 10 ** (log_value - exponent), exponent


def asymptotic_estimate(n: int) -> float:
    """(1/2) sqrt(5/pi) 5^n n^(-3/2); an estimate, not a count"""
    mantissa, exponent = asymptotic_log10(n)
    try:
        return mantissa * 10.0 ** exponent
    except OverflowError:
        return math.inf


def asymptotic_ratio(n: int, a_n: int) -> float:
    """a_n divided by the estimate, computed in log space"""
    mantissa, exponent = asymptotic_log10(n)
    log_ratio = math.log10(a_n) - (math.log10(mantissa) + exponent)
    return 10 ** log_ratio


def asymptotic_ratios(checkpoints=DEFAULT_CHECKPOINTS) -> np.ndarray:
    a = a_rec(max(checkpoints))
    return np.array([asymptotic_ratio(n, a[n]) for n in checkpoints], dtype=float)


def census_rows(N: int) -> List[CensusRow]:
    a = a_rec(N)
    rows = []
    for n in range(N + 1):
        rows.append(CensusRow(
            n=n,
            a_n=a[n],
            b_row=b_row(n),
            c_n=c_exact(n) if n >= 1 else Fraction(0),
            asymptotic_estimate=asymptotic_estimate(n) if n >= 1 else math.nan,
        ))
    return rows


def census_frame(rows: List[CensusRow]) -> pd.DataFrame:
    return pd.DataFrame([row.to_record() for row in rows], columns=list(CensusRow.__dataclass_fields__))


def _check_passport(p: Passport) -> int:
    if p.alpha.n != p.beta.n:
        raise PassportMismatch(f"Passport halves have weights {p.alpha.n} and {p.beta.n}")
    if p.n < 1:
        raise PassportMismatch("Passport of weight 0 has no trees")
    return p.n


def _realisable_by_ordinary_tree(p: Passport) -> bool:
    # n edges, k(alpha) + k(beta) vertices
    return p.alpha.k + p.beta.k == p.n + 1


def ordinary_rooted_count(p: Passport) -> int:
    """Rooted ordinary trees with passport p: n N(alpha) N(beta)"""
    n = _check_passport(p)
    if not _realisable_by_ordinary_tree(p):
        return 0
    return as_integer(n * big_n(p.alpha) * big_n(p.beta), f"rooted count for {p}")


def ordinary_unrooted_mass(p: Passport) -> Fraction:
    """Unrooted ordinary trees with passport p, each weighted 1/|Aut|: N(alpha) N(beta)"""
    _check_passport(p)
    if not _realisable_by_ordinary_tree(p):
        return Fraction(0)
    return big_n(p.alpha) * big_n(p.beta)


def _passport_census(words) -> Dict[Passport, PassportTally]:
    rooted: Dict[Passport, int] = {}
    mass: Dict[Passport, Fraction] = {}
    seen = set()
    for word in words:
        key = passport(from_dyck(word))
        rooted[key] = rooted.get(key, 0) + 1
        mass.setdefault(key, Fraction(0))
        if word in seen:
            continue
        unrooted, codes = classify(word)
        seen.update(codes)
        mass[key] += unrooted.mass
    return {key: PassportTally(rooted[key], mass[key]) for key in rooted}


def brute_force_passport_census(n: int, bound: int = 8) -> Dict[Passport, PassportTally]:
    """Ordinary trees of weight n grouped by passport: (rooted count, sum of 1/|Aut|)"""
    if n > bound:
        raise BoundExceeded("Passport census weight", n, bound)
    return _passport_census(enumerate_words_with_edges(n, n))


def weighted_passport_census(n: int, bound: int = 8) -> Dict[Passport, PassportTally]:
    """All weighted trees of weight n grouped by passport; data only"""
    if n > bound:
        raise BoundExceeded("Passport census weight", n, bound)
    return _passport_census(enumerate_words(n))
