"""Quintic theta dashboard – main Textual application."""

from __future__ import annotations

from textual.app import App
from textual.binding import Binding

from quintic_theta.config.settings import AppConfig
from quintic_theta.engine import VerificationRunner
from quintic_theta.ui.screens.main_screen import MainScreen


class QuinticThetaApp(App):
    """Browse the identity registry and run verifications interactively."""

    CSS_PATH = "app.tcss"

    BINDINGS = [
        Binding("ctrl+q", "quit", "Quit", priority=True),
    ]

    def __init__(self, config: AppConfig | None = None, **kwargs) -> None:  # type: ignore[override]
        super().__init__(**kwargs)
        self.config = config or AppConfig()
        self.title = self.config.app_title
        self._runner = VerificationRunner(jobs=self.config.run.jobs)

    def on_mount(self) -> None:
        self.push_screen(MainScreen(self._runner, order=self.config.run.requested_order))
