"""Command-line package.

Exports
-------
* :func:`main` – argparse entry point behind the ``quintic-theta`` script
* :func:`build_parser` – the sub-command parser, for tests and docs
"""

from quintic_theta.cli.commands import build_parser, main

__all__ = ["build_parser", "main"]
