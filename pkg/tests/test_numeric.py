from __future__ import annotations

import pytest

from quintic_theta.core.exactfield import ALPHA, I
from quintic_theta.core.numeric import (
    ComplexPoint,
    eval_series,
    fricke_constants,
    gamma_polynomial,
    to_complex,
)
from quintic_theta.core.qseries import integer_series
from quintic_theta.errors import SeriesError


def test_embedding():
    assert abs(to_complex(ALPHA) - (1 + 5**0.5) / 2) < 1e-12
    assert abs(to_complex(I) - 1j) < 1e-12


def test_fricke_point():
    assert abs(ComplexPoint(1j).fricke().tau - 0.2j) < 1e-15
    with pytest.raises(SeriesError):
        ComplexPoint(-1j)


def test_eval_needs_enough_terms():
    with pytest.raises(SeriesError):
        eval_series(integer_series([1, 1]), 1j)
    assert abs(eval_series(integer_series([1] + [0] * 20), 1j) - 1) < 1e-12


def test_gamma_constants_are_roots():
    for gamma in fricke_constants():
        assert abs(gamma_polynomial(gamma)) < 1e-8
