"""Quintic theta – exact q-series verification of level five theta identities.

A truncated-series algebra over Q(zeta_20), the quintic theta functions
A, B, C, D with their operators, and a registry of identities checked
from the command line or an interactive Textual dashboard.
"""

__version__ = "0.1.0"
