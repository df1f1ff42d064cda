"""Configuration package.

Exports
-------
* :class:`AppConfig` – top-level configuration
* :class:`RunConfig` – options of a single CLI invocation
* :func:`default_order` – truncation order honouring ``QUINTIC_DEFAULT_ORDER``
* :func:`env_order` – the environment override alone, or None
"""

from quintic_theta.config.settings import (
    DEFAULT_ORDER,
    ORDER_ENV_VAR,
    AppConfig,
    RunConfig,
    default_order,
    env_order,
)

__all__ = [
    "AppConfig",
    "DEFAULT_ORDER",
    "ORDER_ENV_VAR",
    "RunConfig",
    "default_order",
    "env_order",
]
