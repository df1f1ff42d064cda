from __future__ import annotations

import pytest

from quintic_theta.core.report import IdentityReport
from quintic_theta.engine import (
    REGISTRY,
    RegistryEntry,
    VerificationRunner,
    list_registry,
    registry_names,
    resolve_names,
    summarize,
    verify_registry,
)
from quintic_theta.errors import RegistryError

FAST = ["array-structure", "five-cores"]


def _boom(order: int) -> IdentityReport:
    raise ZeroDivisionError("division by zero")


def test_listing_is_sorted_and_complete():
    listing = list_registry()
    names = [entry["name"] for entry in listing]
    assert names == sorted(names)
    assert {"thm1.1-quintic", "watson-modular-eq", "jacobi-quartic"} <= set(names)
    assert all(set(entry) == {"name", "anchor", "default_order"} for entry in listing)
    assert all(entry["default_order"] >= 1 for entry in listing)


def test_unknown_identity():
    with pytest.raises(RegistryError):
        verify_registry("no-such-id")
    with pytest.raises(RegistryError):
        resolve_names(["jacobi-quartic", "no-such-id"])


def test_all_expands():
    assert resolve_names(["all"]) == registry_names()
    assert resolve_names([]) == registry_names()


def test_registry_name_overrides_builder_label():
    report = verify_registry("five-cores", 10)
    assert report.name == "five-cores"
    assert report.anchor == REGISTRY["five-cores"].anchor


def test_builder_exception_becomes_error_report(monkeypatch):
    monkeypatch.setitem(REGISTRY, "boom", RegistryEntry("boom", "always raises", 1, _boom))
    [report] = VerificationRunner().run(["boom"])
    assert report.error == "ZeroDivisionError: division by zero"
    assert report.verdict == "ERROR"
    assert not report.passed
    assert report.to_json()["verdict"] == "ERROR"


def test_parallel_run_is_sorted_and_logged():
    lines: list[str] = []
    runner = VerificationRunner(jobs=2)
    runner.set_log_callback(lines.append)
    reports = runner.run(list(reversed(FAST)))
    assert [r.name for r in reports] == FAST
    assert len(lines) == 2
    assert all(line.startswith("PASS") for line in lines)
    assert summarize(reports) == (2, 0, 0)
    assert all(r.elapsed >= 0 for r in reports)


@pytest.mark.parametrize("name", ["tau-multisection-25", "five-cores-25"])
def test_second_multisection_entries(name):
    report = verify_registry(name, 10)
    assert report.error is None
    assert report.passed, report.detail
