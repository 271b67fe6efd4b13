from fractions import Fraction

import pytest

from logic.census import a_rec, b_row
from logic.errors import DivisionByNonUnit, InvariantViolation, NonSquareConstantTerm
from logic.series import (
    BivariateSeries, Polynomial, TruncatedSeries, div, f_series, h_closed_form,
    h_fixed_point, h_fixed_point_iterates, h_series, mul, sqrt,
)


def test_polynomial_arithmetic():
    s = Polynomial.s()
    p = 1 + 4 * s
    assert p == Polynomial([1, 4])
    assert (p * p).coefficients == (1, 8, 16)
    assert (p - 1).divide_by_s() == 4
    assert p.evaluate(2) == 9
    assert (p / 2).coefficients == (Fraction(1, 2), 2)
    assert str(Polynomial([0, 1, 3])) == "s + 3s^2"
    assert Polynomial([1, 0, 0]).degree == 0
    with pytest.raises(InvariantViolation):
        p.divide_by_s()


def test_product_truncates_to_the_smaller_order():
    product = mul(TruncatedSeries([1, 1], 4), TruncatedSeries([1, -1], 4))
    assert product.coefficients == (1, 0, -1, 0, 0)
    shorter = TruncatedSeries([1, 1], 4) * TruncatedSeries([1, 1], 2)
    assert shorter.order == 2


def test_geometric_series():
    quotient = div(TruncatedSeries([1], 6), TruncatedSeries([1, -1], 6))
    assert quotient.coefficients == (1,) * 7


def test_factorised_radicand():
    left = TruncatedSeries([1, -1], 5) * TruncatedSeries([1, -5], 5)
    assert left == TruncatedSeries([1, -6, 5], 5)


def test_division_needs_a_unit():
    with pytest.raises(DivisionByNonUnit):
        TruncatedSeries([1], 3) / TruncatedSeries([0, 1], 3)


@pytest.mark.parametrize("radicand, root", [
    ([1], [1]),
    ([1, -2, 1], [1, -1]),
    ([4, 4, 1], [2, 1]),
])
def test_sqrt_of_perfect_squares(radicand, root):
    assert sqrt(TruncatedSeries(radicand, 6)) == TruncatedSeries(root, 6)


def test_sqrt_squares_back():
    radicand = TruncatedSeries([1, -6, 5], 12)
    root = radicand.sqrt()
    assert root.coefficients[:4] == (1, -3, -2, -6)
    assert root * root == radicand


def test_sqrt_with_rational_coefficients():
    radicand = TruncatedSeries([1, 1], 8)
    root = radicand.sqrt()
    assert root[1] == Fraction(1, 2)
    assert root[2] == Fraction(-1, 8)
    assert root * root == radicand


def test_sqrt_rejects_non_square_constant():
    with pytest.raises(NonSquareConstantTerm):
        TruncatedSeries([2, 1], 3).sqrt()
    with pytest.raises(NonSquareConstantTerm):
        TruncatedSeries([0, 1], 3).sqrt()


def test_shift_down_requires_zero_constant():
    with pytest.raises(InvariantViolation):
        TruncatedSeries([1, 1], 3).shift_down()


def test_f_series_prefix():
    assert f_series(8).integer_coefficients() == [1, 1, 3, 10, 36, 137, 543, 2219, 9285]


def test_f_series_matches_recurrence():
    assert f_series(30).integer_coefficients() == a_rec(30)


def test_h_slices():
    h = h_closed_form(6)
    assert h.slice(0) == (1,)
    assert h.slice(1) == (0, 1)
    assert h.slice(4) == (0, 1, 6, 15, 14)
    for n in range(1, 7):
        assert tuple(h.coefficient(m, n) for m in range(1, n + 1)) == b_row(n)
    assert h.coefficient(7, 3) == 0


def test_h_at_s_equals_one_is_f():
    assert h_closed_form(12).at_s_equals_one() == f_series(12)


def test_fixed_point_stabilises_one_order_per_step():
    iterates = h_fixed_point_iterates(6)
    final = iterates[-1]
    for step, iterate in enumerate(iterates):
        for n in range(min(step, 6) + 1):
            assert iterate.slice(n) == final.slice(n)


def test_fixed_point_agrees_with_closed_form_to_order_32():
    assert h_fixed_point(32) == h_closed_form(32)
    assert h_closed_form(32).at_s_equals_one() == f_series(32)


def test_h_series_checks_both_paths():
    assert h_series(8) == h_closed_form(8)


def test_bivariate_series_rejects_negative_coefficients():
    with pytest.raises(InvariantViolation):
        BivariateSeries.from_series(TruncatedSeries([1, Polynomial([0, -1])], 1))
