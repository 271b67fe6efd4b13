import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from .census import (
    DEFAULT_CHECKPOINTS, a_rec, asymptotic_ratio, asymptotic_ratios, b_row,
    brute_force_passport_census, c_exact, catalan, ordinary_rooted_count,
    ordinary_unrooted_mass, root_weight_split,
)
from .dyck import enumerate_words, enumerate_words_by_assignment, enumerate_words_with_edges
from .errors import WtCensusError
from .partition import passports_of
from .series import BivariateSeries, f_series, h_closed_form, h_fixed_point
from .tree import census_mass, symmetry_profile, unrooted_census
from .utils import format_rational

logger = logging.getLogger(__name__)


class Discrepancy(Exception):
    """Raised inside a leg to stop at the first mismatch"""


@dataclass
class LegResult:
    name: str
    passed: bool
    checked_up_to: int
    facts: List[str] = field(default_factory=list)
    discrepancy: Optional[str] = None

    def to_dict(self) -> Dict:
        return {
            'name': self.name,
            'passed': self.passed,
            'checked_up_to': self.checked_up_to,
            'facts': list(self.facts),
            'discrepancy': self.discrepancy,
        }


@dataclass
class VerificationReport:
    n_max: int
    bound: int
    passport_bound: int
    legs: List[LegResult]

    @property
    def passed(self) -> bool:
        return all(leg.passed for leg in self.legs)

    @property
    def first_discrepancy(self) -> Optional[str]:
        for leg in self.legs:
            if not leg.passed:
                return f"{leg.name}: {leg.discrepancy}"
        return None

    @property
    def facts(self) -> List[str]:
        return [fact for leg in self.legs for fact in leg.facts]

    def get_summary_stats(self) -> Dict:
        return {
            'legs_run': len(self.legs),
            'legs_passed': sum(1 for leg in self.legs if leg.passed),
            'legs_failed': sum(1 for leg in self.legs if not leg.passed),
        }

    def to_dict(self) -> Dict:
        return {
            'status': "PASS" if self.passed else "FAIL",
            'n_max': self.n_max,
            'bound': self.bound,
            'passport_bound': self.passport_bound,
            'summary': self.get_summary_stats(),
            'first_discrepancy': self.first_discrepancy,
            'legs': [leg.to_dict() for leg in self.legs],
        }


def _expect(observed, expected, what: str) -> None:
    if observed != expected:
        raise Discrepancy(f"{what}: expected {expected}, got {observed}")


def _count(words) -> int:
    return sum(1 for _ in words)


class CrossVerifier:
    """
    Ties every counting formula to an independent computation.

    Formula legs run to n_max; legs that enumerate trees stop at
    min(n_max, bound), and the passport leg at min(n_max, passport_bound).
    """

    LEG_NAMES = (
        "sequence", "edge_refined", "s_equals_one", "functional_equation",
        "unrooted", "root_weight_split", "passports", "asymptotic",
    )

    def __init__(self, bound: int = 8, passport_bound: int = 7,
                 checkpoints: Sequence[int] = DEFAULT_CHECKPOINTS):
        if bound < 0 or passport_bound < 0:
            raise ValueError("Enumeration bounds must be non-negative")
        self.bound = bound
        self.passport_bound = passport_bound
        self.checkpoints = tuple(checkpoints)
        self._series_cache: Dict[int, BivariateSeries] = {}

    def run_full_verification(self, n_max: int) -> VerificationReport:
        if n_max < 0:
            raise ValueError(f"n_max must be non-negative, got {n_max}")
        legs = [self._run_leg(name, n_max) for name in self.LEG_NAMES]
        report = VerificationReport(n_max, self.bound, self.passport_bound, legs)
        logger.info("Verification up to %d: %s", n_max, report.get_summary_stats())
        return report

    def _run_leg(self, name: str, n_max: int) -> LegResult:
        check: Callable[[int, LegResult], None] = getattr(self, f"_check_{name}")
        leg = LegResult(name=name, passed=True, checked_up_to=n_max)
        try:
            check(n_max, leg)
        except (Discrepancy, WtCensusError) as e:
            leg.passed = False
            leg.discrepancy = str(e)
            logger.warning("Leg %s failed: %s", name, e)
        return leg

    def _h(self, n_max: int) -> BivariateSeries:
        if n_max not in self._series_cache:
            self._series_cache[n_max] = h_closed_form(n_max)
        return self._series_cache[n_max]

    def _check_sequence(self, n_max: int, leg: LegResult) -> None:
        a = a_rec(n_max)
        series = f_series(n_max).integer_coefficients()
        for n in range(n_max + 1):
            _expect(series[n], a[n], f"t^{n} coefficient of f")
        for n in range(min(n_max, self.bound) + 1):
            _expect(_count(enumerate_words(n)), a[n], f"words of weight {n}")
        leg.facts.append(f"a_0..a_{n_max} = {' '.join(str(v) for v in a)}")

    def _check_edge_refined(self, n_max: int, leg: LegResult) -> None:
        a = a_rec(n_max)
        h = self._h(n_max)
        for n in range(1, n_max + 1):
            row = b_row(n)
            _expect(h.coefficient(0, n), 0, f"s^0 t^{n} coefficient of h")
            _expect(tuple(h.coefficient(m, n) for m in range(1, n + 1)), row, f"t^{n} slice of h")
            _expect(sum(row), a[n], f"sum of b_(m,{n})")
        for n in range(1, min(n_max, self.bound) + 1):
            row = b_row(n)
            for m in range(1, n + 1):
                filtered = set(enumerate_words_with_edges(n, m))
                _expect(len(filtered), row[m - 1], f"words of weight {n} with {m} edges")
                assigned = list(enumerate_words_by_assignment(n, m))
                _expect(len(assigned), row[m - 1], f"weight assignments for ({m}, {n})")
                if set(assigned) != filtered:
                    raise Discrepancy(f"weight assignment and filtering disagree at ({m}, {n})")
        if n_max >= 4:
            leg.facts.append(f"b-row for n = 4 is {' '.join(str(b) for b in b_row(4))}")

    def _check_s_equals_one(self, n_max: int, leg: LegResult) -> None:
        _expect(self._h(n_max).at_s_equals_one(), f_series(n_max), "h(1, t)")
        leg.facts.append(f"h(1, t) = f(t) to order {n_max}")

    def _check_functional_equation(self, n_max: int, leg: LegResult) -> None:
        closed = self._h(n_max)
        iterated = h_fixed_point(n_max)
        for n in range(n_max + 1):
            _expect(iterated.slice(n), closed.slice(n), f"t^{n} slice of the fixed point")
        leg.facts.append(f"fixed point agrees with the closed form to order {n_max}")

    def _check_unrooted(self, n_max: int, leg: LegResult) -> None:
        a = a_rec(n_max)
        upper = min(n_max, self.bound)
        leg.checked_up_to = upper
        for n in range(1, upper + 1):
            classes = unrooted_census(n)
            _expect(census_mass(classes), c_exact(n), f"sum of 1/|Aut| at weight {n}")
            _expect(sum(c.rootings for c in classes), a[n], f"rootings at weight {n}")
            if n == 4:
                leg.facts.append(f"rooted weight-4 total = {sum(c.rootings for c in classes)}")
                leg.facts.append(f"unrooted weight-4 classes = {len(classes)}")
                profile = ", ".join(f"aut {k}: {v}" for k, v in symmetry_profile(classes).items())
                leg.facts.append(f"weight-4 symmetry profile = {{{profile}}}")
                leg.facts.append(f"c_4 = {format_rational(c_exact(4))}")

    def _check_root_weight_split(self, n_max: int, leg: LegResult) -> None:
        a = a_rec(n_max)
        split = root_weight_split(n_max)
        for n, (first, rest) in enumerate(split, start=1):
            _expect(first + rest, a[n], f"root weight split at {n}")
        for n in range(1, min(n_max, self.bound) + 1):
            light = _count(w for w in enumerate_words(n) if w.tokens[0].weight == 1)
            _expect((light, a[n] - light), split[n - 1], f"enumerated root weights at {n}")

    def _check_passports(self, n_max: int, leg: LegResult) -> None:
        upper = min(n_max, self.passport_bound)
        leg.checked_up_to = upper
        for n in range(1, upper + 1):
            census = brute_force_passport_census(n, bound=self.passport_bound)
            total = 0
            for p in passports_of(n):
                tally = census.get(p)
                rooted = tally.rooted if tally else 0
                mass = tally.mass if tally else 0
                _expect(rooted, ordinary_rooted_count(p), f"rooted trees with passport {p}")
                _expect(mass, ordinary_unrooted_mass(p), f"unrooted mass with passport {p}")
                total += rooted
            _expect(total, catalan(n), f"ordinary rooted trees of weight {n}")
        if upper >= 1:
            leg.facts.append(f"passport counts match through n = {upper}")

    def _check_asymptotic(self, n_max: int, leg: LegResult) -> None:
        top = max((n_max,) + self.checkpoints)
        leg.checked_up_to = top
        a = a_rec(top)
        for n in range(1, top + 1):
            ratio = asymptotic_ratio(n, a[n])
            if not 0.0 < ratio < 1.0:
                raise Discrepancy(f"ratio a_{n}/estimate = {ratio:.6f} outside (0, 1)")
        if not self.checkpoints:
            return
        ratios = asymptotic_ratios(self.checkpoints)
        if len(ratios) > 1 and not np.all(np.diff(ratios) > 0):
            raise Discrepancy(f"ratios at {list(self.checkpoints)} are not increasing: {ratios.tolist()}")
        last = float(ratios[-1])
        if self.checkpoints[-1] >= 400 and not 0.9 < last < 1.0:
            raise Discrepancy(f"ratio at {self.checkpoints[-1]} = {last:.6f} outside (0.9, 1.0)")
        leg.facts.append(
            "ratios " + ", ".join(f"n={n}: {r:.4f}" for n, r in zip(self.checkpoints, ratios))
        )


def cross_verify(n_max: int, bound: int = 8, passport_bound: int = 7,
                 checkpoints: Sequence[int] = DEFAULT_CHECKPOINTS) -> VerificationReport:
    return CrossVerifier(bound, passport_bound, checkpoints).run_full_verification(n_max)
