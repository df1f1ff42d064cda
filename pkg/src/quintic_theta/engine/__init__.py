"""Verification engine package.

Exports
-------
* :class:`VerificationRunner` – thread-pool runner over registry entries
* :class:`RegistryEntry` – one named identity with its anchor and default order
* :class:`IdentityReport` – outcome of one verification
* :func:`list_registry` – registry listing as plain dictionaries
* :func:`verify_registry` – run a single entry by name
"""

from quintic_theta.core.report import IdentityReport
from quintic_theta.engine.executor import LogCallback, VerificationRunner, summarize
from quintic_theta.engine.registry import (
    REGISTRY,
    RegistryEntry,
    get_entry,
    list_registry,
    registry_names,
    resolve_names,
    verify_registry,
)

__all__ = [
    "IdentityReport",
    "LogCallback",
    "REGISTRY",
    "RegistryEntry",
    "VerificationRunner",
    "get_entry",
    "list_registry",
    "registry_names",
    "resolve_names",
    "summarize",
    "verify_registry",
]
