from __future__ import annotations

import logging

import pytest

from quintic_theta.core.eisenstein import eisenstein_level5
from quintic_theta.core.identities import (
    verify_eisenstein_parameterizations,
    verify_jacobi_quartic,
    verify_quotient_fifth_power,
    verify_t_products,
    weight_one_classes,
)
from quintic_theta.core.pentops import HomPoly
from quintic_theta.core.qseries import QSeries, compare_to_order
from quintic_theta.core.report import CheckLog
from quintic_theta.core.tables import published
from quintic_theta.engine import registry_names, verify_registry

# keeps the full sweep at a desk-friendly size
SWEEP_ORDERS = {"eisenstein-roots": 6, "pentamidiation-radicals": 8, "tau-classes": 10}


def test_jacobi_quartic():
    report = verify_jacobi_quartic(30)
    assert report.passed, report.detail


def test_weight_one_classes_cover_residues():
    classes = weight_one_classes(10)
    assert sorted(classes) == [1, 2, 3, 4]


def test_weight_three_pairs_with_conjugate_character():
    n = 10
    product = (HomPoly.of(*published("E1chi4").data) * HomPoly.of(*published("E2chi3").data)).series(n)
    assert compare_to_order(eisenstein_level5(3, "chi2", n), product, n).agree
    report = verify_eisenstein_parameterizations(n)
    assert report.passed, report.detail


@pytest.mark.parametrize(("check", "order"), [(verify_t_products, 12), (verify_quotient_fifth_power, 10)])
def test_reaches_requested_order(check, order):
    report = check(order)
    assert report.passed, report.detail
    assert report.order == order
    assert "known only below" not in report.detail


def test_short_comparison_is_noted(caplog):
    log = CheckLog("short")
    with caplog.at_level(logging.WARNING):
        outcome = log.compare("truncated", QSeries.constant(1, 5), QSeries.constant(1, 10), 10)
    assert outcome.agree
    report = log.report()
    assert report.passed
    assert report.order == 5
    assert "truncated: known only below q^5 of q^10" in report.detail
    assert "compared below q^5 only" in caplog.text


@pytest.mark.slow
@pytest.mark.parametrize("name", registry_names())
def test_registry_entry_passes(name):
    report = verify_registry(name, SWEEP_ORDERS.get(name, 20))
    assert report.error is None
    assert report.passed, report.detail


@pytest.mark.slow
@pytest.mark.parametrize(
    "name",
    [
        "discriminant-forms",
        "eisenstein-parameterizations",
        "eisenstein-roots",
        "partition-25n+24",
        "partition-5^2",
        "partition-dissection",
        "pentamidiation-arrays",
        "pentamidiation-radicals",
        "residue-classes",
        "tau-classes",
    ],
)
def test_mixed_polynomial_entries_at_default_order(name):
    report = verify_registry(name)
    assert report.error is None
    assert report.passed, report.detail
