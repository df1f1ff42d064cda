"""Application-wide configuration settings."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

from quintic_theta.errors import ConfigError

DEFAULT_ORDER = 100
ORDER_ENV_VAR = "QUINTIC_DEFAULT_ORDER"
OUTPUT_FORMATS = ("text", "json")


def env_order() -> int | None:
    """The positive integer in ``QUINTIC_DEFAULT_ORDER``, or None when unset."""
    raw = os.environ.get(ORDER_ENV_VAR)
    if raw is None or not raw.strip():
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{ORDER_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ConfigError(f"{ORDER_ENV_VAR} must be positive, got {value}")
    return value


def default_order() -> int:
    """Return the truncation order, preferring the environment override."""
    override = env_order()
    return DEFAULT_ORDER if override is None else override


@dataclass
class RunConfig:
    """Options shared by every CLI sub-command."""

    command: str = "verify"
    order: int | None = None  # None = use default_order()
    output_format: str = "text"
    jobs: int = 1
    out_path: Path | None = None

    def __post_init__(self) -> None:
        if self.order is not None and self.order < 1:
            raise ConfigError(f"order must be >= 1, got {self.order}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(f"unknown output format {self.output_format!r}")
        if self.jobs < 1:
            raise ConfigError(f"jobs must be >= 1, got {self.jobs}")

    @property
    def effective_order(self) -> int:
        return self.order if self.order is not None else default_order()

    @property
    def requested_order(self) -> int | None:
        """Explicit or environment order; None lets each identity use its own default."""
        return self.order if self.order is not None else env_order()


@dataclass
class AppConfig:
    """Top-level application configuration."""

    run: RunConfig = field(default_factory=RunConfig)
    app_title: str = "Quintic theta identities"
    schema_version: int = 1
