"""Verification outcome records shared by the algebra modules and the engine."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from quintic_theta.core.qseries import Comparison, QSeries, compare_to_order, format_exponent

logger = logging.getLogger(__name__)


@dataclass
class IdentityReport:
    """Outcome of verifying one identity to a truncation order."""

    name: str
    anchor: str = ""
    order: Fraction | int = 0
    passed: bool = True
    first_failure: Fraction | None = None
    detail: str = ""
    error: str | None = None
    elapsed: float = 0.0

    @property
    def verdict(self) -> str:
        if self.error is not None:
            return "ERROR"
        return "PASS" if self.passed else "FAIL"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "order": format_exponent(Fraction(self.order)),
            "verdict": self.verdict,
            "passed": self.passed,
            "first_failure": (
                None if self.first_failure is None else format_exponent(self.first_failure)
            ),
            "detail": self.detail,
            "error": self.error,
            "elapsed": round(self.elapsed, 4),
        }


@dataclass
class CheckLog:
    """Collects labelled sub-checks of one identity and folds them into a report.

    The report order is the smallest order any series comparison reached;
    the first failing sub-check supplies ``first_failure`` and leads the
    detail text.
    """

    name: str
    anchor: str = ""
    order: Fraction | None = None
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    first_failure: Fraction | None = None

    def _narrow(self, order: Fraction) -> None:
        self.order = order if self.order is None else min(self.order, order)

    def compare(self, label: str, lhs: QSeries, rhs: QSeries, order: Fraction | int) -> Comparison:
        outcome = compare_to_order(lhs, rhs, order)
        self._narrow(outcome.order)
        if outcome.order < Fraction(order):
            reached, asked = outcome.order, Fraction(order)
            logger.warning("%s: %s compared below q^%s only, asked for q^%s", self.name, label, reached, asked)
            self.notes.append(f"{label}: known only below q^{reached} of q^{asked}")
        if not outcome.agree:
            at = format_exponent(outcome.first_failure)
            self.failures.append(f"{label}: sides differ at q^{at}")
            if self.first_failure is None:
                self.first_failure = outcome.first_failure
        return outcome

    def require(self, label: str, ok: bool, note: str = "") -> bool:
        """Record an exact (non-series) check."""
        if not ok:
            self.failures.append(f"{label}: {note or 'failed'}")
        return ok

    def note(self, text: str) -> None:
        self.notes.append(text)

    def report(self) -> IdentityReport:
        return IdentityReport(
            name=self.name,
            anchor=self.anchor,
            order=self.order if self.order is not None else 0,
            passed=not self.failures,
            first_failure=self.first_failure,
            detail="; ".join(self.failures + self.notes),
        )
