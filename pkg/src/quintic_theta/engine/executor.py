"""Thread-pool runner for registry verifications."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

from quintic_theta.core.report import IdentityReport
from quintic_theta.engine.registry import get_entry, resolve_names

logger = logging.getLogger(__name__)

LogCallback = Callable[[str], None]


class VerificationRunner:
    """Run registry entries and collect one report per name.

    No job raises: a builder exception becomes a failed report whose
    ``error`` holds ``"<ExceptionType>: message"``.
    """

    def __init__(self, jobs: int = 1) -> None:
        self.jobs = max(1, jobs)
        self._log_callback: LogCallback | None = None

    def set_log_callback(self, callback: LogCallback | None) -> None:
        """Set a callback that receives one status line per finished job."""
        self._log_callback = callback

    def _emit(self, report: IdentityReport) -> None:
        line = f"{report.verdict:<5} {report.name} ({report.elapsed:.2f}s)"
        if report.error:
            line += f" {report.error}"
        logger.info(line)
        if self._log_callback:
            self._log_callback(line)

    def run_one(self, name: str, order: int | None = None) -> IdentityReport:
        entry = get_entry(name)
        start = time.perf_counter()
        try:
            report = entry.run(order)
        except Exception as exc:  # noqa: BLE001
            logger.debug("builder for %s raised", name, exc_info=True)
            report = IdentityReport(
                name=entry.name,
                anchor=entry.anchor,
                order=order if order is not None else entry.default_order,
                passed=False,
                error=f"{type(exc).__name__}: {exc}",
            )
        report.elapsed = time.perf_counter() - start
        self._emit(report)
        return report

    def run(self, names: list[str] | None = None, order: int | None = None) -> list[IdentityReport]:
        """Verify *names* (all entries when empty) and return reports sorted by name.

        Unknown names raise :class:`~quintic_theta.errors.RegistryError`
        before any job starts.
        """
        selected = resolve_names(names)
        if self.jobs == 1 or len(selected) == 1:
            reports = [self.run_one(name, order) for name in selected]
        else:
            with ThreadPoolExecutor(max_workers=self.jobs) as pool:
                reports = list(pool.map(lambda name: self.run_one(name, order), selected))
        return sorted(reports, key=lambda r: r.name)


def summarize(reports: list[IdentityReport]) -> tuple[int, int, int]:
    """(passed, failed, errored) counts."""
    errored = sum(1 for r in reports if r.error is not None)
    passed = sum(1 for r in reports if r.error is None and r.passed)
    return passed, len(reports) - passed - errored, errored
