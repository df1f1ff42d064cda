from __future__ import annotations

from fractions import Fraction

import pytest

from quintic_theta.core.eisenstein import (
    bernoulli,
    character,
    divisor_sums,
    eisenstein_level1,
    eisenstein_level5,
    lambert_L,
)
from quintic_theta.core.pentops import multisection_eigenvalue
from quintic_theta.errors import CharacterError


def test_bernoulli():
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)


@pytest.mark.parametrize(
    ("k", "head"),
    [
        (2, [1, -24, -72, -96, -168]),
        (4, [1, 240, 2160, 6720, 17520]),
        (6, [1, -504, -16632, -122976, -532728]),
    ],
)
def test_level_one(k, head):
    assert eisenstein_level1(k, 5).integer_coeffs() == head


def test_divisor_sums():
    assert divisor_sums(3, 6) == [0, 1, 9, 28, 73, 126]


def test_characters():
    chi3 = character("chi3")
    assert [chi3(n) for n in range(5)] == [0, 1, -1, -1, 1]
    assert chi3.parity == 1
    assert character("chi2").parity == -1
    with pytest.raises(CharacterError):
        character("chi7")


def test_parity_is_enforced():
    with pytest.raises(CharacterError):
        eisenstein_level5(2, "chi2", 5)
    with pytest.raises(CharacterError):
        lambert_L(3, "chi3", 5)


def test_lambert_series_head():
    # sum_{d | N} chi3(N/d) d
    assert lambert_L(2, "chi3", 5).integer_coeffs() == [0, 1, 1, 2, 3]


@pytest.mark.parametrize(("k", "chi", "value"), [(2, "chi3", 5), (2, "chi1", 5), (3, "chi2", 25), (4, "chi1", 125)])
def test_multisection_eigenvalue(k, chi, value):
    assert multisection_eigenvalue(k, chi, 15) == value
