"""UI screens package."""

from quintic_theta.ui.screens.main_screen import MainScreen

__all__ = ["MainScreen"]
