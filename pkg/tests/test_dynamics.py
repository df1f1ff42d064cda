from __future__ import annotations

import pytest

from quintic_theta.core.dynamics import (
    convention_residual,
    frobenius_coefficients,
    kaneko_polynomials,
    kaneko_residual,
    kaneko_solution,
    resolve_derivative_convention,
    schwarzian_factor,
    verify_e2_forms,
    verify_kaneko_ode,
)
from quintic_theta.core.eisenstein import eisenstein_level1
from quintic_theta.core.pentops import HomPoly
from quintic_theta.core.qseries import compare_to_order
from quintic_theta.core.quintic import quintic_pair
from quintic_theta.errors import SeriesError


def test_index_zero_terminates_immediately():
    assert frobenius_coefficients(0, 3) == (1, 0, 0)
    assert kaneko_solution(0).coefficients == (1,)


@pytest.mark.parametrize("n", [4, 9, -1])
def test_bad_indices(n):
    with pytest.raises(SeriesError):
        kaneko_solution(n)


def test_polynomial_list_skips_four():
    assert [sol.n for sol in kaneko_polynomials(8)] == [0, 1, 2, 3, 5, 6, 7, 8]
    assert [sol.n for sol in kaneko_polynomials(3)] == [0, 1, 2, 3]
    with pytest.raises(SeriesError):
        kaneko_polynomials(9)


def test_a_and_b_solve_index_zero():
    a, b = quintic_pair(12)
    for f in (a, b):
        lhs, rhs = kaneko_residual(f, 0, 12)
        assert compare_to_order(lhs, rhs, 12).agree


def test_low_index_polynomials():
    assert kaneko_solution(1).coefficients == (1, 7)
    assert kaneko_solution(2).coefficients[:2] == (1, 39)
    assert kaneko_solution(5).coefficients[:3] == (1, -465, -10385)


def test_derivative_convention_is_q_d_dq():
    fitting = resolve_derivative_convention(10)
    assert [label for label, _ in fitting] == ["q d/dq", "(1/2 pi i) d/dtau"]
    a = quintic_pair(10)[0]
    assert not convention_residual(a, 0, 10, None).agree
    assert not convention_residual(a, 0, 10, 2).agree


def test_kaneko_report_names_convention():
    report = verify_kaneko_ode(10, max_n=0)
    assert report.passed, report.detail
    assert "derivative convention q d/dq" in report.detail


def test_schwarzian_factor_is_minus_one():
    factor, schwarz, icosian = schwarzian_factor(12)
    assert factor == -1
    assert compare_to_order(schwarz, icosian * factor, 12).agree


def test_e2_forms_in_a_and_b(small_order):
    n = small_order
    e2 = eisenstein_level1(2, n)
    a, b = quintic_pair(n + 1)
    from_a = HomPoly.of(-11, 66, 1).series(n) + a.theta_derivative() / a * 60
    from_b = HomPoly.of(1, -66, -11).series(n) + b.theta_derivative() / b * 60
    assert compare_to_order(e2, from_a, n).agree
    assert compare_to_order(e2, from_b, n).agree
    report = verify_e2_forms(n)
    assert report.passed, report.detail


@pytest.mark.slow
def test_kaneko_report():
    report = verify_kaneko_ode(15, max_n=1)
    assert report.passed, report.detail
