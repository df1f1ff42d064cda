from __future__ import annotations

import asyncio

from textual.widgets import OptionList

from quintic_theta.engine import registry_names
from quintic_theta.ui.app import QuinticThetaApp
from quintic_theta.ui.screens.main_screen import MainScreen
from quintic_theta.ui.widgets.console import ConsoleOutput


def test_dashboard_lists_registry():
    async def scenario() -> int:
        app = QuinticThetaApp()
        async with app.run_test() as pilot:
            await pilot.pause()
            assert isinstance(app.screen, MainScreen)
            return app.screen.query_one("#registry", OptionList).option_count

    assert asyncio.run(scenario()) == len(registry_names())


def test_run_selected_streams_report(monkeypatch):
    seen: list[str] = []
    monkeypatch.setattr(ConsoleOutput, "write_report", lambda self, report: seen.append(report.name))

    async def scenario() -> bool:
        app = QuinticThetaApp()
        async with app.run_test() as pilot:
            await pilot.pause()
            screen = app.screen
            registry = screen.query_one("#registry", OptionList)
            registry.highlighted = registry_names().index("array-structure")
            await pilot.press("f5")
            await app.workers.wait_for_complete()
            await pilot.pause()
            return screen.running

    assert asyncio.run(scenario()) is False
    assert seen == ["array-structure"]
