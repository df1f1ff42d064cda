from __future__ import annotations

import pytest

from quintic_theta.core.products import (
    euler_product,
    eta_power,
    eta_quotient,
    jacobi_null_thetas,
    pentagonal_terms,
    qpoch,
    ramanujan_f,
)
from quintic_theta.core.qseries import compare_to_order
from quintic_theta.errors import SeriesError

EULER_16 = [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1]


def test_pentagonal_exponents():
    assert sorted(e for e, _ in pentagonal_terms(16)) == [0, 1, 2, 5, 7, 12, 15]


def test_euler_product():
    assert euler_product(16).integer_coeffs() == EULER_16


def test_partition_generating_function():
    assert eta_power(-1, 1, 1, 11).integer_coeffs() == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_eta_quotient_cancels():
    product = eta_quotient({1: 2, 5: -1}, 30) * eta_quotient({1: -2, 5: 1}, 30)
    assert product.integer_coeffs() == [1] + [0] * 29


def test_pochhammer_head():
    assert qpoch(1, 5, 6).integer_coeffs() == [1, -1, 0, 0, 0, 0]


def test_triple_product_gives_euler(small_order):
    assert compare_to_order(ramanujan_f(-1, 1, -1, 2, small_order), euler_product(small_order), small_order).agree


def test_theta3():
    _, theta3, theta4 = jacobi_null_thetas(10)
    assert theta3.integer_coeffs() == [1, 2, 0, 0, 2, 0, 0, 0, 0, 2]
    assert theta4.integer_coeffs() == [1, -2, 0, 0, 2, 0, 0, 0, 0, -2]


def test_divergent_f_rejected():
    with pytest.raises(SeriesError):
        ramanujan_f(1, 0, 1, 0, 5)
