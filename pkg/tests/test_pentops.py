from __future__ import annotations

import pytest

from quintic_theta.core.eisenstein import eisenstein_level1
from quintic_theta.core.pentops import (
    HomPoly,
    MixedPoly,
    array_for,
    compare_published,
    five_adic_exponent,
    has_unit_eigenvalue,
    hecke_apply,
    hecke_inverse_apply,
    hecke_matrix,
    pent_array,
    pent_array_via_series,
    pentamidiate_series_check,
    perturbed_array,
    verify_array_structure,
    verify_e4_multisection,
    verify_pentamidiation_arrays,
    verify_pentication,
)
from quintic_theta.core.qseries import compare_to_order
from quintic_theta.core.quintic import fifth_powers, quintic_pair
from quintic_theta.errors import SeriesError

E4 = HomPoly.of(1, 228, 494, -228, 1)
E4_Q5 = HomPoly.of(1, -12, 14, 12, 1)


def test_array_shape_and_column_sums():
    b1 = pent_array(1)
    assert (b1.rows, b1.cols) == (6, 2)
    for d in range(1, 5):
        assert pent_array(d).column_sums() == tuple(11 ** (d - k) for k in range(d + 1))


def test_hecke_matrix_degree_two():
    assert hecke_matrix(2).row(1) == (22, 5, -22)


@pytest.mark.parametrize(("which", "d"), [("B", 1), ("B", 2), ("A", 2)])
def test_matches_printed_tables(which, d):
    assert compare_published(which, d) == []


@pytest.mark.slow
@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_matches_printed_hecke_matrices(d):
    assert compare_published("A", d) == []


def test_two_routes_to_the_array():
    for d in (1, 2, 3):
        assert pent_array_via_series(d) == pent_array(d)


def test_array_kind_and_degree_checked():
    with pytest.raises(ValueError):
        array_for("C", 1)
    with pytest.raises(ValueError):
        pent_array(13)
    with pytest.raises(ValueError):
        compare_published("B", 5)


def test_unit_eigenvalue_and_determinant():
    for d in range(1, 5):
        assert has_unit_eigenvalue(d)
        sign, _ = five_adic_exponent(hecke_matrix(d).det())
        assert sign != 0


def test_e4_parameterization(small_order):
    assert compare_to_order(E4.series(small_order), eisenstein_level1(4, small_order), small_order).agree


def test_e4_inverse_step():
    assert hecke_inverse_apply(E4) == E4_Q5
    assert hecke_apply(E4_Q5) == E4


def test_homogeneous_polynomial_algebra():
    p = HomPoly.of(1, 2)
    assert p * p == HomPoly.of(1, 4, 4)
    assert p**2 == p * p
    with pytest.raises(SeriesError):
        p + HomPoly.of(1, 2, 3)


def test_random_polynomials_array_route(rng):
    for d in (1, 2):
        for _ in range(5):
            p = HomPoly.of(*(rng.randint(-9, 9) for _ in range(d + 1)))
            if p.is_zero():
                continue
            assert pentamidiate_series_check(p, 15).passed


def test_structure_report():
    report = verify_array_structure(4)
    assert report.passed, report.detail
    assert "determinants" in report.detail


def test_e4_multisection_report():
    assert verify_e4_multisection(20).passed


def test_pentication_report():
    assert verify_pentication(30).passed


def test_mixed_poly_places_whole_powers_of_q():
    a5 = MixedPoly((0, 0, 0, 0, 0, 1)).series(10)
    assert compare_to_order(a5, fifth_powers(10)[0], 10).agree
    a6b4 = MixedPoly((0,) * 6 + (1, 0, 0, 0, 0)).series(10)
    a, b = quintic_pair(10)
    assert compare_to_order(a6b4, a**6 * b**4, 10).agree


def test_perturbed_array_is_rejected():
    report = pentamidiate_series_check(HomPoly.of(0, 1, 0), 15, array=perturbed_array())
    assert not report.passed
    assert report.first_failure == 1


def test_pentamidiation_arrays_report():
    report = verify_pentamidiation_arrays(15, count=20)
    assert report.passed, report.detail
    assert "perturbed B_2 first differs at q^1" in report.detail


@pytest.mark.slow
def test_pentamidiation_arrays_full_order():
    report = verify_pentamidiation_arrays(80, degrees=(1, 2, 3, 4), count=20)
    assert report.passed, report.detail
    assert report.order == 80
