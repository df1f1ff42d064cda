"""Main screen: registry list on the left, verification console on the right."""

from __future__ import annotations

from textual import work
from textual.app import ComposeResult
from textual.binding import Binding
from textual.containers import Horizontal, Vertical
from textual.screen import Screen
from textual.widgets import Button, Footer, Header, OptionList, Static
from textual.widgets.option_list import Option

from quintic_theta.engine import VerificationRunner, list_registry, summarize
from quintic_theta.ui.widgets.console import ConsoleOutput
from quintic_theta.ui.widgets.toolbar import Toolbar


class MainScreen(Screen):
    """Primary dashboard screen::

        +-------------------------------+
        |           Header              |
        +---------------+---------------+
        |  Identities   |   Console     |
        +---------------+---------------+
        |  Toolbar / Footer             |
        +-------------------------------+
    """

    BINDINGS = [
        Binding("f5", "run_selected", "Run selected", priority=True),
        Binding("f6", "run_all", "Run all", priority=True),
        Binding("ctrl+l", "clear_console", "Clear console", priority=True),
    ]

    def __init__(self, runner: VerificationRunner, order: int | None = None, **kwargs) -> None:  # type: ignore[override]
        super().__init__(**kwargs)
        self._runner = runner
        self._order = order
        self._verifying = False

    # -- layout ---------------------------------------------------------

    def compose(self) -> ComposeResult:
        yield Header()
        with Horizontal(id="main-split"):
            with Vertical(id="registry-pane"):
                yield Static("Identities", classes="pane-title")
                yield OptionList(
                    *(Option(entry["name"], id=entry["name"]) for entry in list_registry()),
                    id="registry",
                )
            with Vertical(id="console-pane"):
                yield Static("Console", classes="pane-title")
                yield ConsoleOutput(id="console")
        yield Toolbar(id="toolbar")
        yield Footer()

    def on_mount(self) -> None:
        registry = self.query_one("#registry", OptionList)
        registry.highlighted = 0
        registry.focus()

    @property
    def running(self) -> bool:
        return self._verifying

    def selected_name(self) -> str | None:
        registry = self.query_one("#registry", OptionList)
        if registry.highlighted is None:
            return None
        return registry.get_option_at_index(registry.highlighted).id

    # -- event handlers -------------------------------------------------

    def on_option_list_option_highlighted(self, event: OptionList.OptionHighlighted) -> None:
        entry = next(e for e in list_registry() if e["name"] == event.option.id)
        self.sub_title = f"{entry['anchor']} (default order {entry['default_order']})"

    def on_button_pressed(self, event: Button.Pressed) -> None:
        actions = {
            "run-btn": self.action_run_selected,
            "run-all-btn": self.action_run_all,
            "clear-btn": self.action_clear_console,
        }
        action = actions.get(event.button.id or "")
        if action is not None:
            action()

    # -- actions --------------------------------------------------------

    def action_run_selected(self) -> None:
        name = self.selected_name()
        console = self.query_one("#console", ConsoleOutput)
        if name is None:
            console.write_error("No identity selected.")
            return
        self._start([name])

    def action_run_all(self) -> None:
        self._start(None)

    def action_clear_console(self) -> None:
        self.query_one("#console", ConsoleOutput).clear_console()

    def _start(self, names: list[str] | None) -> None:
        console = self.query_one("#console", ConsoleOutput)
        if self._verifying:
            console.write_error("A verification is already running.")
            return
        self._verifying = True
        self.query_one("#toolbar", Toolbar).set_running(True)
        console.write_status(f"Verifying {names[0] if names else 'all identities'}...")
        self._run_in_worker(names)

    # -- worker ---------------------------------------------------------

    @work(thread=True, exclusive=True)
    def _run_in_worker(self, names: list[str] | None) -> None:
        """Run the checks on a background thread, posting results through ``call_from_thread``."""
        console = self.query_one("#console", ConsoleOutput)

        def _live_log(msg: str) -> None:
            self.app.call_from_thread(console.write_status, msg)

        self._runner.set_log_callback(_live_log)
        try:
            reports = self._runner.run(names, self._order)
        except Exception as exc:  # noqa: BLE001
            self.app.call_from_thread(console.write_error, f"{type(exc).__name__}: {exc}")
        else:
            for report in reports:
                self.app.call_from_thread(console.write_report, report)
            passed, failed, errored = summarize(reports)
            self.app.call_from_thread(
                console.write_status, f"{passed} passed, {failed} failed, {errored} errored"
            )
        finally:
            self._runner.set_log_callback(None)
            self.app.call_from_thread(self._finish)

    def _finish(self) -> None:
        self._verifying = False
        self.query_one("#toolbar", Toolbar).set_running(False)
