"""``quintic-theta`` command line: verify, pentarray, scan, dump, list, browse."""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from pathlib import Path
from typing import Callable

from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from quintic_theta.config.settings import AppConfig, RunConfig
from quintic_theta.core.eisenstein import eisenstein_level1, eisenstein_level5, lambert_L, t_series
from quintic_theta.core.partitions import SCAN_PRESETS, congruence_scan, run_preset
from quintic_theta.core.pentops import MAX_ARRAY_DEGREE, array_for, compare_published
from quintic_theta.core.products import eta_power
from quintic_theta.core.qseries import QSeries, format_exponent
from quintic_theta.core.quintic import rogers_ramanujan, rr_continued_fraction, theta_series
from quintic_theta.engine import IdentityReport, VerificationRunner, list_registry, summarize
from quintic_theta.errors import ConfigError, QuinticError, RegistryError

logger = logging.getLogger("quintic_theta")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

_CHARACTER_ID = re.compile(r"^([EL])_?\{?(\d+),?(chi[1-4])\}?$")


# -- output helpers ---------------------------------------------------------


def _setup_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    handler = RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=True)
    logging.basicConfig(level=level, format="%(message)s", datefmt="[%X]", handlers=[handler], force=True)


def _emit_json(payload: object, out_path: Path | None, console: Console) -> None:
    text = json.dumps(payload, indent=2)
    if out_path is not None:
        out_path.write_text(text + "\n", encoding="utf-8")
        logger.info("wrote %s", out_path)
    else:
        console.print_json(text)


def _report_table(reports: list[IdentityReport]) -> Table:
    table = Table(title="Identity verification")
    table.add_column("identity", style="cyan")
    table.add_column("order", justify="right")
    table.add_column("verdict")
    table.add_column("seconds", justify="right")
    table.add_column("detail", overflow="fold")
    styles = {"PASS": "green", "FAIL": "bold red", "ERROR": "bold magenta"}
    for r in reports:
        payload = r.to_json()
        table.add_row(
            r.name,
            payload["order"],
            f"[{styles[r.verdict]}]{r.verdict}[/]",
            f"{r.elapsed:.2f}",
            r.error or r.detail,
        )
    return table


# -- series ids for dump ----------------------------------------------------


def _series_builders() -> dict[str, Callable[[int], QSeries]]:
    builders: dict[str, Callable[[int], QSeries]] = {
        "R": lambda n: rr_continued_fraction(n),
        "delta": lambda n: eta_power(24, 1, 1, n).shift(1).truncate(n),
    }
    for which in "ABCD":
        builders[which] = lambda n, w=which: theta_series(w, order=n)
    for which in "GH":
        builders[which] = lambda n, w=which: rogers_ramanujan(w, order=n)
    for k in (2, 4, 6):
        builders[f"E{k}"] = lambda n, k=k: eisenstein_level1(k, n)
    for i in range(1, 7):
        builders[f"t{i}"] = lambda n, i=i: t_series(i, n)
    return builders


def series_by_id(series_id: str, order: int) -> QSeries:
    """Resolve a dump id such as ``A``, ``E4``, ``t3``, ``E2chi3`` or ``L_{2,chi1}``."""
    builder = _series_builders().get(series_id)
    if builder is not None:
        return builder(order)
    match = _CHARACTER_ID.match(series_id.replace(" ", ""))
    if match:
        kind, k, chi = match.group(1), int(match.group(2)), match.group(3)
        if kind == "E":
            return eisenstein_level5(k, chi, order)
        return lambert_L(k, chi, order)
    raise RegistryError(f"unknown series id {series_id!r}")


# -- sub-commands -----------------------------------------------------------


def cmd_verify(args: argparse.Namespace, config: AppConfig, console: Console) -> int:
    runner = VerificationRunner(jobs=config.run.jobs)
    if args.verbose:
        runner.set_log_callback(lambda line: console.print(line, highlight=False))
    reports = runner.run(args.names, config.run.requested_order)
    if config.run.output_format == "json":
        _emit_json(
            {"schema": config.schema_version, "reports": [r.to_json() for r in reports]},
            config.run.out_path,
            console,
        )
    else:
        console.print(_report_table(reports))
        passed, failed, errored = summarize(reports)
        console.print(f"{passed} passed, {failed} failed, {errored} errored")
    return EXIT_OK if all(r.passed and r.error is None for r in reports) else EXIT_FAIL


def cmd_pentarray(args: argparse.Namespace, config: AppConfig, console: Console) -> int:
    if not 1 <= args.degree <= MAX_ARRAY_DEGREE:
        raise ConfigError(f"degree must be in 1..{MAX_ARRAY_DEGREE}, got {args.degree}")
    matrix = array_for(args.which, args.degree)
    diffs = compare_published(args.which, args.degree) if args.check_paper else None
    if config.run.output_format == "json":
        payload: dict = {
            "schema": config.schema_version,
            "which": args.which,
            "degree": args.degree,
            "rows": matrix.to_lists(),
        }
        if diffs is not None:
            payload["published"] = "MATCH" if not diffs else "MISMATCH"
            payload["differences"] = [list(d) for d in diffs]
        _emit_json(payload, config.run.out_path, console)
    else:
        console.print(str(matrix), highlight=False)
        if diffs is not None:
            if diffs:
                console.print(f"[bold red]MISMATCH[/] at {len(diffs)} entries")
                for i, j, computed, printed in diffs[:10]:
                    console.print(f"  ({i}, {j}): computed {computed}, printed {printed}")
            else:
                console.print("[green]MATCH[/]")
    return EXIT_FAIL if diffs else EXIT_OK


def cmd_scan(args: argparse.Namespace, config: AppConfig, console: Console) -> int:
    if args.preset:
        cert = run_preset(args.preset, args.nmax)
    else:
        missing = [flag for flag, value in (("-k", args.k), ("-M", args.M), ("-a", args.a), ("-b", args.b))
                   if value is None]
        if missing:
            raise ConfigError(f"scan needs --preset or all of -k -M -a -b (missing {' '.join(missing)})")
        cert = congruence_scan(args.k, args.M, args.a, args.b, args.nmax or 200)
    if config.run.output_format == "json":
        _emit_json({"schema": config.schema_version, **cert.to_json()}, config.run.out_path, console)
    else:
        style = "green" if cert.passed else "bold red"
        console.print(f"[{style}]{cert.describe()}[/]")
    return EXIT_OK if cert.passed else EXIT_FAIL


def cmd_dump(args: argparse.Namespace, config: AppConfig, console: Console) -> int:
    order = config.run.effective_order
    series = series_by_id(args.series_id, order)
    if config.run.output_format == "json" or config.run.out_path is not None:
        _emit_json(
            {"schema": config.schema_version, "id": args.series_id, **series.to_json()},
            config.run.out_path,
            console,
        )
    else:
        table = Table(title=f"{args.series_id} below q^{order}")
        table.add_column("exponent", justify="right")
        table.add_column("coefficient")
        for exponent, coeff in series.truncate(order).items():
            table.add_row(format_exponent(exponent), str(coeff))
        console.print(table)
    return EXIT_OK


def cmd_list(args: argparse.Namespace, config: AppConfig, console: Console) -> int:
    entries = list_registry()
    if config.run.output_format == "json":
        _emit_json({"schema": config.schema_version, "identities": entries}, config.run.out_path, console)
        return EXIT_OK
    table = Table(title="Registered identities")
    table.add_column("identity", style="cyan")
    table.add_column("default order", justify="right")
    table.add_column("anchor")
    for entry in entries:
        table.add_row(entry["name"], str(entry["default_order"]), entry["anchor"])
    console.print(table)
    return EXIT_OK


def cmd_browse(args: argparse.Namespace, config: AppConfig, console: Console) -> int:
    from quintic_theta.ui.app import QuinticThetaApp

    QuinticThetaApp(config=config).run()
    return EXIT_OK


COMMANDS: dict[str, Callable[[argparse.Namespace, AppConfig, Console], int]] = {
    "verify": cmd_verify,
    "pentarray": cmd_pentarray,
    "scan": cmd_scan,
    "dump": cmd_dump,
    "list": cmd_list,
    "browse": cmd_browse,
}


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=None,
                        help="truncation order (default: $QUINTIC_DEFAULT_ORDER or each identity's own)")
    common.add_argument("--json", action="store_true", help="emit JSON instead of tables")
    common.add_argument("--jobs", type=int, default=1, help="worker threads for verify")
    common.add_argument("--out", type=Path, default=None, help="write JSON output to FILE")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")

    parser = argparse.ArgumentParser(
        prog="quintic-theta",
        description="Exact q-series verification of quintic theta function identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", parents=[common], help="verify registered identities")
    verify.add_argument("names", nargs="*", default=["all"], help="identity names or 'all'")

    pent = sub.add_parser("pentarray", parents=[common], help="print a pentamidiation array or Hecke matrix")
    pent.add_argument("degree", type=int)
    pent.add_argument("--which", choices=("A", "B"), default="B")
    pent.add_argument("--check-paper", action="store_true", help="compare with the printed table")

    scan = sub.add_parser("scan", parents=[common], help="scan a multipartition congruence")
    scan.add_argument("-k", type=int, help="number of colours")
    scan.add_argument("-M", type=int, help="modulus")
    scan.add_argument("-a", type=int, help="progression step")
    scan.add_argument("-b", type=int, help="progression offset")
    scan.add_argument("--nmax", type=int, default=None)
    scan.add_argument("--preset", choices=sorted(SCAN_PRESETS))

    dump = sub.add_parser("dump", parents=[common], help="print a q-series")
    dump.add_argument("series_id")

    sub.add_parser("list", parents=[common], help="list registered identities")
    sub.add_parser("browse", parents=[common], help="open the interactive dashboard")
    return parser


def main(argv: list[str] | None = None) -> int:
    """Parse arguments, run the sub-command and return its exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    _setup_logging(args.verbose)
    console = Console()
    try:
        run = RunConfig(
            command=args.command,
            order=args.order,
            output_format="json" if args.json else "text",
            jobs=args.jobs,
            out_path=args.out,
        )
        return COMMANDS[args.command](args, AppConfig(run=run), console)
    except (QuinticError, ValueError) as exc:
        logger.error("%s: %s", type(exc).__name__, exc)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
