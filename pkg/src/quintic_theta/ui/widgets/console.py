"""Console output widget for verification feedback."""

from __future__ import annotations

from rich.text import Text
from textual.widgets import RichLog

from quintic_theta.core.report import IdentityReport

_VERDICT_STYLES = {"PASS": "bold green", "FAIL": "bold red", "ERROR": "bold magenta"}


class ConsoleOutput(RichLog):
    """Scrolling log of status lines and verification reports."""

    def __init__(self, **kwargs) -> None:  # type: ignore[override]
        super().__init__(highlight=True, markup=True, wrap=True, **kwargs)

    def write_status(self, text: str) -> None:
        self.write(Text(text, style="dim italic"))

    def write_error(self, text: str) -> None:
        self.write(Text(text, style="bold red"))

    def write_report(self, report: IdentityReport) -> None:
        """One line per report, verdict coloured; detail or error on the next line."""
        line = Text()
        line.append(f"{report.verdict:<5} ", style=_VERDICT_STYLES[report.verdict])
        line.append(report.name, style="cyan")
        line.append(f"  order {report.to_json()['order']}, {report.elapsed:.2f}s")
        self.write(line)
        extra = report.error or report.detail
        if extra:
            self.write(Text(f"      {extra}", style="dim"))

    def clear_console(self) -> None:
        self.clear()
