"""Toolbar widget with Run selected / Run all / Clear actions."""

from __future__ import annotations

from textual.app import ComposeResult
from textual.containers import Horizontal
from textual.widgets import Button


class Toolbar(Horizontal):
    """Bottom toolbar.

    Buttons
    -------
    * **Run selected (F5)** – verify the highlighted identity
    * **Run all (F6)**      – verify every registered identity
    * **Clear**             – clear the console
    """

    DEFAULT_CSS = """
    Toolbar {
        dock: bottom;
        height: 3;
        padding: 0 1;
        background: $surface;
    }

    Toolbar Button {
        margin: 0 1;
    }
    """

    def compose(self) -> ComposeResult:
        yield Button("Run selected (F5)", id="run-btn", variant="success")
        yield Button("Run all (F6)", id="run-all-btn", variant="primary")
        yield Button("Clear", id="clear-btn", variant="default")

    def set_running(self, running: bool) -> None:
        """Disable the run buttons while a worker is busy."""
        for button_id in ("#run-btn", "#run-all-btn"):
            self.query_one(button_id, Button).disabled = running
