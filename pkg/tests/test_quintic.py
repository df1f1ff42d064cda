from __future__ import annotations

from fractions import Fraction

import pytest

from quintic_theta.core.exactfield import ALPHA, BETA
from quintic_theta.core.identities import verify_quintic_relation, verify_rr_quintic
from quintic_theta.core.qseries import compare_to_order
from quintic_theta.core.quintic import fifth_powers, quintic_pair, rogers_ramanujan, theta_series
from quintic_theta.errors import SeriesError


def test_leading_terms():
    a, b = quintic_pair(5)
    assert a.valuation == Fraction(1, 5)
    assert a.coeff(Fraction(1, 5)) == 1
    assert a.coeff(Fraction(6, 5)) == Fraction(-2, 5)
    assert b.coeff(0) == 1
    assert b.coeff(1) == Fraction(3, 5)


def test_fifth_powers_have_integer_heads():
    a5, b5 = fifth_powers(5)
    assert [a5.coeff(k) for k in range(3)] == [0, 1, -2]
    assert [b5.coeff(k) for k in range(3)] == [1, 3, 4]


def test_c_and_d_heads():
    c, d = theta_series("C", order=5), theta_series("D", order=5)
    assert c.coeff(1) == -ALPHA
    assert d.coeff(1) == -BETA
    assert c.coeff(2) == 0 and d.coeff(4) == 0


@pytest.mark.parametrize("which", ["A", "B"])
def test_sum_equals_product(which, small_order):
    lhs = theta_series(which, "sum", small_order)
    rhs = theta_series(which, "product", small_order)
    assert compare_to_order(lhs, rhs, small_order).agree


def test_rogers_ramanujan_sum_and_product(small_order):
    for which in ("G", "H"):
        lhs = rogers_ramanujan(which, "sum", small_order)
        rhs = rogers_ramanujan(which, "product", small_order)
        assert compare_to_order(lhs, rhs, small_order).agree


def test_unknown_forms():
    with pytest.raises(SeriesError):
        theta_series("E")
    with pytest.raises(SeriesError):
        theta_series("A", "linear", 5)


def test_quintic_relation():
    report = verify_quintic_relation(25)
    assert report.passed, report.detail


def test_continued_fraction_relation():
    report = verify_rr_quintic(30)
    assert report.passed, report.detail
