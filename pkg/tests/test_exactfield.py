from __future__ import annotations

from fractions import Fraction

import pytest

from quintic_theta.core.exactfield import (
    ALPHA,
    BETA,
    I,
    ONE,
    SQRT5,
    ZERO,
    ZETA5,
    FieldElement,
    field_constant,
    iroot,
    nth_root_in_field,
    rational_root,
)
from quintic_theta.errors import FieldError


def _random_element(rng) -> FieldElement:
    while True:
        x = FieldElement([Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(8)])
        if not x.is_zero():
            return x


def test_named_constants():
    assert SQRT5 * SQRT5 == 5
    assert ALPHA + BETA == 1
    assert ALPHA * BETA == -1
    assert I * I == -1
    assert ZETA5**5 == 1
    assert FieldElement.zeta(20) == ONE
    assert field_constant("alpha") == ALPHA


def test_unknown_constant():
    with pytest.raises(FieldError):
        field_constant("pi")


def test_inverse_round_trip(rng):
    for _ in range(200):
        x = _random_element(rng)
        assert x * x.inverse() == 1


def test_ring_axioms(rng):
    for _ in range(1000):
        a, b, c = (_random_element(rng) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a - b) + b == a


def test_division_by_zero():
    with pytest.raises(FieldError):
        ZERO.inverse()


def test_galois_and_norm():
    assert SQRT5.galois(3) == -SQRT5
    assert SQRT5.galois(11) == SQRT5
    assert SQRT5.norm() == 625
    assert SQRT5.in_real_quadratic()
    assert not I.in_real_quadratic()
    with pytest.raises(FieldError):
        SQRT5.galois(5)


def test_complex_embedding():
    assert abs(complex(ALPHA) - (1 + 5**0.5) / 2) < 1e-12
    assert abs(complex(I) - 1j) < 1e-12


def test_rational_roots():
    assert iroot(1024, 5) == 4
    assert iroot(10, 2) is None
    assert rational_root(Fraction(27, 8), 3) == Fraction(3, 2)
    assert rational_root(Fraction(-32), 5) == -2
    assert rational_root(Fraction(-4), 2) is None


def test_roots_in_field():
    assert nth_root_in_field(FieldElement.rational(32), 5) == 2
    assert nth_root_in_field(FieldElement.rational(-1), 2) == I
    assert nth_root_in_field(FieldElement.rational(5), 2) == SQRT5
    assert nth_root_in_field(FieldElement.rational(2), 2) is None
