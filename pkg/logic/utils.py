import math
from fractions import Fraction
from typing import Union

from .errors import InvariantViolation

Number = Union[int, Fraction]


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient, zero outside 0 <= k <= n"""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    return math.factorial(n)


def as_integer(value: Number, what: str = "value") -> int:
    """Return an exact integer, refusing rationals with a non-trivial denominator"""
    if isinstance(value, int):
        return value
    if value.denominator != 1:
        raise InvariantViolation(f"{what} is not integral: {value}")
    return value.numerator


def format_rational(value: Number) -> str:
    """Render an exact number as 'p' or 'p/q'"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
