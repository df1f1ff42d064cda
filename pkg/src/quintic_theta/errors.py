"""Exception hierarchy shared by every quintic-theta module."""

from __future__ import annotations


class QuinticError(ValueError):
    """Base class for all errors raised by the package."""


class FieldError(QuinticError):
    """Bad constant name, division by zero or a missing root in Q(zeta_20)."""


class SeriesError(QuinticError):
    """Invalid truncated-series operation (unknown coefficient, bad grid, non-unit)."""


class CharacterError(QuinticError):
    """Unknown Dirichlet character or a weight/parity mismatch."""


class ConstantsError(QuinticError):
    """A computed normalisation constant failed its cross-check."""


class RegistryError(QuinticError):
    """Lookup of an identity, series id or preset that does not exist."""


class ConfigError(QuinticError):
    """Invalid run configuration or environment override."""
