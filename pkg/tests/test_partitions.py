from __future__ import annotations

import pytest

from quintic_theta.core.partitions import (
    L_POLY,
    PartitionFamily,
    congruence_scan,
    five_core_check,
    partition_coeffs,
    progression_label,
    progression_series,
    run_preset,
    tau_coefficients,
    tau_multisection,
    verify_congruences,
    verify_dissection_5_1,
    verify_watson,
)
from quintic_theta.core.products import eta_quotient
from quintic_theta.core.qseries import compare_to_order
from quintic_theta.errors import RegistryError, SeriesError


def test_partition_numbers():
    assert partition_coeffs(1, 10) == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)
    assert PartitionFamily(2).value(3) == 10
    assert PartitionFamily(1).value(-1) == 0


def test_progression():
    assert progression_series(1, 5, 4, 5).integer_coeffs() == [5, 30, 135, 490, 1575]


def test_tau():
    assert tau_coefficients(5) == (0, 1, -24, 252, -1472, 4830)


def test_l_is_a_five_core_generating_function(small_order):
    gen = eta_quotient({1: -1, 5: 5}, small_order).shift(1).truncate(small_order)
    assert compare_to_order(L_POLY.series(small_order), gen, small_order).agree


def test_ramanujan_congruence_scan():
    cert = congruence_scan(1, 5, 5, 4, 100)
    assert cert.passed
    assert cert.counterexample is None
    assert cert.to_json()["verdict"] == "PASS"


def test_failed_scan_reports_first_counterexample():
    cert = congruence_scan(1, 7, 5, 4, 50)
    assert not cert.passed
    assert cert.counterexample == (0, 5)
    assert "fails at n = 0" in cert.describe()


def test_scan_rejects_bad_progression():
    with pytest.raises(SeriesError):
        congruence_scan(1, 5, 0, 4, 10)


def test_presets():
    assert run_preset("ramanujan-25", 40).passed
    with pytest.raises(RegistryError):
        run_preset("ramanujan-7")


def test_dissection():
    assert verify_dissection_5_1(30).passed


def test_watson():
    assert verify_watson(40).passed


def test_five_cores():
    assert five_core_check(1, 20).passed


def test_tau_multisection():
    report = tau_multisection(1, 15)
    assert report.passed, report.detail


def test_second_multisections():
    tau_report = tau_multisection(2, 10)
    assert tau_report.passed, tau_report.detail
    assert tau_report.order == 10
    cores = five_core_check(2, 10)
    assert cores.passed, cores.detail


def test_progression_labels():
    assert progression_label(25, -1) == "25n - 1"
    assert progression_label(5, 4) == "5n + 4"
    assert progression_label(7, 0) == "7n"
    assert "p_1(5n + 4)" in congruence_scan(1, 7, 5, 4, 10).describe()


@pytest.mark.slow
def test_all_theorem_presets():
    assert verify_congruences().passed
