"""UI widgets package."""

from quintic_theta.ui.widgets.console import ConsoleOutput
from quintic_theta.ui.widgets.toolbar import Toolbar

__all__ = ["ConsoleOutput", "Toolbar"]
