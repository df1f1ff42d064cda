from __future__ import annotations

from fractions import Fraction

import pytest

from quintic_theta.core.qseries import QSeries, compare_to_order, integer_series, series_sum
from quintic_theta.errors import SeriesError


def _random_series(rng, length: int = 15) -> QSeries:
    return integer_series([1] + [rng.randint(-20, 20) for _ in range(length - 1)])


def test_invert_geometric():
    f = integer_series([1, 1, 0, 0, 0, 0])
    assert f.invert().integer_coeffs() == [1, -1, 1, -1, 1, -1]


def test_multiply_then_divide(rng):
    for _ in range(50):
        f, g = _random_series(rng), _random_series(rng)
        assert compare_to_order((f * g) / g, f, 15).agree


def test_fifth_root_of_binomial():
    f = integer_series([1, 5, 10, 10, 5, 1, 0, 0])
    root = f.nth_root(5)
    assert root.integer_coeffs() == [1, 1, 0, 0, 0, 0, 0, 0]


def test_nth_root_round_trip(rng):
    for _ in range(50):
        f = _random_series(rng, 10)
        assert compare_to_order((f**5).nth_root(5), f, 10).agree


def test_root_needs_divisible_valuation():
    with pytest.raises(SeriesError):
        integer_series([1, 0, 0], val=1).nth_root(5)


def test_fractional_power_refines_grid():
    f = integer_series([1, 2, 1, 0, 0, 0], val=1)  # q (1 + q)^2
    half = f.power(Fraction(1, 2))
    assert half.valuation == Fraction(1, 2)
    assert half.coeff(Fraction(1, 2)) == 1
    assert half.coeff(Fraction(3, 2)) == 1
    assert half.coeff(Fraction(5, 2)) == 0


def test_unknown_coefficient():
    with pytest.raises(SeriesError):
        integer_series([1, 2, 3]).coeff(3)


def test_multisection_picks_residue_class():
    f = integer_series(list(range(10)))
    assert f.multisect(5, 1).integer_coeffs() == [1, 6]
    assert f.multisect(5, 0).integer_coeffs() == [0, 5]


def test_multisections_interleave(rng):
    for _ in range(50):
        f = _random_series(rng, 20)
        rebuilt = series_sum(f.multisect(5, m).substitute_power(5).shift(m) for m in range(5))
        assert compare_to_order(rebuilt, f, 20).agree


def test_substitute_then_multisect(rng):
    f = _random_series(rng, 12)
    assert f.substitute_power(5).multisect(5, 0).integer_coeffs() == f.integer_coeffs()


def test_theta_derivative_is_a_derivation(rng):
    for _ in range(50):
        f, g = _random_series(rng), _random_series(rng)
        lhs = (f * g).theta_derivative()
        rhs = f.theta_derivative() * g + f * g.theta_derivative()
        assert compare_to_order(lhs, rhs, 15).agree


def test_regrid_and_shift():
    f = integer_series([1, 2, 3])
    refined = f.regrid_refine(5)
    assert refined.precision == Fraction(3, 5)
    assert refined.coeff(Fraction(2, 5)) == 3
    assert f.shift(Fraction(1, 5)).valuation == Fraction(1, 5)


def test_twist_by_trivial_root(rng):
    f = _random_series(rng)
    assert compare_to_order(f.twist(0), f, 15).agree


def test_compare_reports_first_failure():
    outcome = compare_to_order(integer_series([1, 2, 3, 4]), integer_series([1, 2, 0, 4]), 4)
    assert not outcome.agree
    assert outcome.first_failure == 2


def test_to_json():
    payload = QSeries([1, 0, -2], 1, 5).to_json()
    assert payload["grid"] == 5
    assert payload["precision"] == "4/5"
    assert [t["exponent"] for t in payload["terms"]] == ["1/5", "3/5"]
