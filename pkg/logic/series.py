"""
Exact truncated power series in t.

Coefficients are exact rationals (int or Fraction) or Polynomials in a
second variable s, which is how h(s, t) is expanded. Every operation
returns a series of order min(operand orders); nothing is silently
extended. Integral rationals are kept as int so the common all-integer
case stays fast.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from .errors import DivisionByNonUnit, InvariantViolation, NonSquareConstantTerm, SeriesError
from .utils import as_integer

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


def _exact(value: Scalar) -> Scalar:
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def _divide(value: Scalar, divisor: Scalar) -> Scalar:
    if isinstance(value, int) and isinstance(divisor, int) and value % divisor == 0:
        return value // divisor
    return _exact(Fraction(value) / divisor)


class Polynomial:
    """Dense polynomial in s with exact rational coefficients"""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Sequence[Scalar] = ()):
        values = [_exact(Fraction(c)) if not isinstance(c, int) else c for c in coefficients]
        while values and values[-1] == 0:
            values.pop()
        self.coefficients: Tuple[Scalar, ...] = tuple(values)

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        return cls((value,))

    @classmethod
    def s(cls) -> "Polynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    @property
    def is_constant(self) -> bool:
        return len(self.coefficients) <= 1

    def coefficient(self, m: int) -> Scalar:
        return self.coefficients[m] if 0 <= m < len(self.coefficients) else 0

    def evaluate(self, s: Scalar) -> Scalar:
        total: Scalar = 0
        for c in reversed(self.coefficients):
            total = total * s + c
        return _exact(total) if isinstance(total, Fraction) else total

    def divide_by_s(self) -> "Polynomial":
        if self.coefficient(0) != 0:
            raise InvariantViolation(f"Polynomial {self} is not divisible by s")
        return Polynomial(self.coefficients[1:])

    @staticmethod
    def _lift(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        size = max(len(self.coefficients), len(other.coefficients))
        return Polynomial([_exact(self.coefficient(m) + other.coefficient(m)) for m in range(size)])

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coefficients])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial([_exact(c * other) for c in self.coefficients])
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial()
        product: List[Scalar] = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return Polynomial([_exact(c) if isinstance(c, Fraction) else c for c in product])

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return Polynomial([_divide(c, scalar) for c in self.coefficients])

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return False
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coefficients)})"

    def __str__(self) -> str:
        terms = []
        for m, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if m == 0:
                terms.append(str(c))
            else:
                power = "s" if m == 1 else f"s^{m}"
                terms.append(power if c == 1 else f"{c}{power}")
        return " + ".join(terms) if terms else "0"


Coefficient = Union[Scalar, Polynomial]


def _unit(value: Coefficient) -> Scalar:
    """The scalar behind an invertible constant coefficient"""
    if isinstance(value, Polynomial):
        if not value.is_constant or value.is_zero:
            raise DivisionByNonUnit()
        return value.coefficient(0)
    if value == 0:
        raise DivisionByNonUnit()
    return value


def _scalar_sqrt(value: Scalar) -> Scalar:
    value = Fraction(value)
    if value < 0:
        raise NonSquareConstantTerm(value)
    top, bottom = math.isqrt(value.numerator), math.isqrt(value.denominator)
    if top * top != value.numerator or bottom * bottom != value.denominator:
        raise NonSquareConstantTerm(value)
    return _exact(Fraction(top, bottom))


class TruncatedSeries:
    """c_0 + c_1 t + ... + c_N t^N, known exactly up to the truncation order N"""

    def __init__(self, coefficients: Sequence[Coefficient], order: int):
        if order < 0:
            raise SeriesError(f"Truncation order must be non-negative, got {order}")
        values = [_exact(c) if isinstance(c, Fraction) else c for c in list(coefficients)[:order + 1]]
        zero = values[0] * 0 if values and isinstance(values[0], Polynomial) else 0
        values.extend([zero] * (order + 1 - len(values)))
        self.coefficients: Tuple[Coefficient, ...] = tuple(values)
        self.order = order

    @property
    def _zero(self) -> Coefficient:
        return self.coefficients[0] * 0

    def __getitem__(self, n: int) -> Coefficient:
        return self.coefficients[n]

    def __len__(self) -> int:
        return self.order + 1

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coefficients, min(order, self.order))

    def _other(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries([other], self.order)

    def __add__(self, other) -> "TruncatedSeries":
        other = self._other(other)
        order = min(self.order, other.order)
        return TruncatedSeries([self[n] + other[n] for n in range(order + 1)], order)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coefficients], self.order)

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-self._other(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return self._other(other) + (-self)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction, Polynomial)):
            return TruncatedSeries([c * other for c in self.coefficients], self.order)
        order = min(self.order, other.order)
        product = []
        for n in range(order + 1):
            total = self._zero
            for k in range(n + 1):
                total = total + self[k] * other[n - k]
            product.append(total)
        return TruncatedSeries(product, order)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([_scale_down(c, other) for c in self.coefficients], self.order)
        order = min(self.order, other.order)
        lead = _unit(other[0])
        quotient: List[Coefficient] = []
        for n in range(order + 1):
            remainder = self[n]
            for k in range(1, n + 1):
                remainder = remainder - other[k] * quotient[n - k]
            quotient.append(_scale_down(remainder, lead))
        return TruncatedSeries(quotient, order)

    def sqrt(self) -> "TruncatedSeries":
        """The square root with the positive root of the constant term"""
        constant = self[0]
        if isinstance(constant, Polynomial):
            if not constant.is_constant:
                raise NonSquareConstantTerm(constant)
            root_scalar = _scalar_sqrt(constant.coefficient(0))
            first: Coefficient = Polynomial.constant(root_scalar)
        else:
            root_scalar = _scalar_sqrt(constant)
            first = root_scalar
        if root_scalar == 0:
            raise NonSquareConstantTerm(constant)
        root: List[Coefficient] = [first]
        for n in range(1, self.order + 1):
            remainder = self[n]
            for k in range(1, n):
                remainder = remainder - root[k] * root[n - k]
            root.append(_scale_down(remainder, 2 * root_scalar))
        return TruncatedSeries(root, self.order)

    def shift_down(self) -> "TruncatedSeries":
        """Divide by t; the constant term must vanish"""
        if self[0] != 0:
            raise InvariantViolation(f"Cannot divide by t: constant term is {self[0]}")
        if self.order == 0:
            raise SeriesError("Cannot divide an order-0 series by t")
        return TruncatedSeries(self.coefficients[1:], self.order - 1)

    def integer_coefficients(self) -> List[int]:
        return [as_integer(Fraction(c), f"coefficient of t^{n}") for n, c in enumerate(self.coefficients)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coefficients, other.coefficients))

    def __repr__(self) -> str:
        return f"TruncatedSeries({[str(c) for c in self.coefficients]}, order={self.order})"


def _scale_down(value: Coefficient, divisor: Scalar) -> Coefficient:
    if isinstance(value, Polynomial):
        return value / divisor
    return _divide(value, divisor)


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a / b


def sqrt(a: TruncatedSeries) -> TruncatedSeries:
    return a.sqrt()


@dataclass(frozen=True)
class BivariateSeries:
    """slices[n][m] is the coefficient of s^m t^n"""
    slices: Tuple[Tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.slices) - 1

    def slice(self, n: int) -> Tuple[int, ...]:
        return self.slices[n]

    def coefficient(self, m: int, n: int) -> int:
        row = self.slices[n]
        return row[m] if 0 <= m < len(row) else 0

    def at_s_equals_one(self) -> TruncatedSeries:
        return TruncatedSeries([sum(row) for row in self.slices], self.order)

    @classmethod
    def from_series(cls, series: TruncatedSeries) -> "BivariateSeries":
        slices = []
        for n, coefficient in enumerate(series.coefficients):
            polynomial = coefficient if isinstance(coefficient, Polynomial) else Polynomial.constant(coefficient)
            if polynomial.degree > n:
                raise InvariantViolation(f"t^{n} slice has s-degree {polynomial.degree}")
            row = [as_integer(Fraction(c), f"coefficient of s^{m} t^{n}") for m, c in enumerate(polynomial.coefficients)]
            if any(c < 0 for c in row):
                raise InvariantViolation(f"Negative coefficient in the t^{n} slice: {row}")
            slices.append(tuple(row))
        return cls(tuple(slices))


def f_series(N: int) -> TruncatedSeries:
    """(1 - t - sqrt(1 - 6t + 5t^2)) / (2t) to order N"""
    radicand = TruncatedSeries([1, -6, 5], N + 1)
    numerator = TruncatedSeries([1, -1], N + 1) - radicand.sqrt()
    # the positive root cancels the constant term, which removes the pole at t = 0
    result = numerator.shift_down() / 2
    result.integer_coefficients()
    return result


def h_closed_form(N: int) -> BivariateSeries:
    """(1 - t - sqrt(1 - (2+4s)t + (1+4s)t^2)) / (2st) to order N"""
    s = Polynomial.s()
    one = Polynomial.constant(1)
    radicand = TruncatedSeries([one, -(2 + 4 * s), 1 + 4 * s], N + 1)
    numerator = TruncatedSeries([one, -one], N + 1) - radicand.sqrt()
    halved = numerator.shift_down() / 2
    divided = TruncatedSeries([c.divide_by_s() for c in halved.coefficients], N)
    return BivariateSeries.from_series(divided)


def h_fixed_point_iterates(N: int) -> List[BivariateSeries]:
    """Iterates of h <- 1 + (st/(1-t)) h^2 starting from h = 1, N+1 steps"""
    s = Polynomial.s()
    one = Polynomial.constant(1)
    kernel = TruncatedSeries([Polynomial()] + [s] * N, N)
    h = TruncatedSeries([one], N)
    iterates = [BivariateSeries.from_series(h)]
    for _ in range(N + 1):
        h = TruncatedSeries([one], N) + kernel * (h * h)
        iterates.append(BivariateSeries.from_series(h))
    logger.debug("Fixed point of order %d reached after %d iterations", N, N + 1)
    return iterates


def h_fixed_point(N: int) -> BivariateSeries:
    return h_fixed_point_iterates(N)[-1]


def h_series(N: int) -> BivariateSeries:
    """h(s, t) from the closed form, checked against the quadratic fixed point"""
    closed = h_closed_form(N)
    iterated = h_fixed_point(N)
    if closed != iterated:
        first = next(n for n in range(N + 1) if closed.slice(n) != iterated.slice(n))
        raise InvariantViolation(
            f"Closed form and fixed point disagree at t^{first}: {closed.slice(first)} vs {iterated.slice(first)}"
        )
    return closed
