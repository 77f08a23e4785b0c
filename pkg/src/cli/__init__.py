"""Command-line interface and snapshot persistence."""

from bucketed_balances.cli.main import (
    EXIT_DOMAIN_ERROR,
    EXIT_OK,
    EXIT_SNAPSHOT_ERROR,
    EXIT_USAGE_ERROR,
    cli,
    cli_main,
    run,
)
from bucketed_balances.cli.snapshot import (
    Snapshot,
    dump_snapshot,
    load_snapshot,
    parse_snapshot,
    save_snapshot,
)

__all__ = [
    "EXIT_DOMAIN_ERROR",
    "EXIT_OK",
    "EXIT_SNAPSHOT_ERROR",
    "EXIT_USAGE_ERROR",
    "Snapshot",
    "cli",
    "cli_main",
    "dump_snapshot",
    "load_snapshot",
    "parse_snapshot",
    "run",
    "save_snapshot",
]
