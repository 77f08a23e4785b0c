"""Command-line driver over a snapshot-backed ledger with a virtual clock.

stdout carries only machine output (integers, ``amount expiresAt`` lines,
CSV). Messages and logs go to stderr.
"""

import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Sequence

import click

from bucketed_balances.adversary import (
    AttackPlan,
    TimingStrategy,
    compare_with_unbounded,
    render_attack_csv,
    run_trials,
    summarize,
)
from bucketed_balances.cli.snapshot import load_snapshot, save_snapshot
from bucketed_balances.config import (
    AMOUNT_MAX,
    DEFAULT_ATTACK_DEPOSITS,
    DEFAULT_BUCKET_COUNT,
    MAX_ATTACK_DEPOSITS,
    THIRTY_DAYS,
    CostWeights,
    ResourceConfig,
)
from bucketed_balances.core import tradeoff as tradeoff_rows
from bucketed_balances.costs import bench_costs as bench_cost_rows
from bucketed_balances.costs import render_cost_csv, render_tradeoff_csv
from bucketed_balances.exceptions import BucketedBalanceError, SnapshotError
from bucketed_balances.ledger import Ledger

logger = logging.getLogger(__name__)

PROG_NAME = "bucketed-balances"

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2
EXIT_SNAPSHOT_ERROR = 3

_LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


class CommandFailure(click.ClickException):
    """A library error surfaced with its CLI exit code."""

    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


class LedgerGroup(click.Group):
    """Group mapping library errors to exit codes (1 domain, 3 snapshot)."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except SnapshotError as e:
            raise CommandFailure(str(e), EXIT_SNAPSHOT_ERROR) from e
        except BucketedBalanceError as e:
            raise CommandFailure(str(e), EXIT_DOMAIN_ERROR) from e


def _configure_logging(verbose: bool) -> None:
    root = logging.getLogger("bucketed_balances")
    for handler in list(root.handlers):
        if getattr(handler, "_cli_handler", False):
            root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(_LOG_FORMAT))
    handler._cli_handler = True  # type: ignore[attr-defined]
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)


def _parse_k_values(ctx: click.Context, param: click.Parameter, value: str) -> list[int]:
    try:
        values = [int(part) for part in value.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"expected a comma-separated list of integers, got {value!r}")
    if not values or any(v < 1 for v in values):
        raise click.BadParameter("every k must be a positive integer")
    return values


@contextmanager
def _ledger_session(state: Path, save: bool = True) -> Iterator[Ledger]:
    """Load the ledger, yield it, and save it back only if the body succeeded."""
    ledger = load_snapshot(state)
    yield ledger
    if save:
        save_snapshot(ledger, state)


state_option = click.option(
    "--state",
    "state",
    required=True,
    type=click.Path(dir_okay=False, path_type=Path),
    help="Snapshot file holding the ledger state.",
)


@click.group(cls=LedgerGroup)
@click.option("--verbose", "-v", is_flag=True, help="Log debug output to stderr.")
def cli(verbose: bool) -> None:
    """Time-bucketed balance ledger with a virtual clock."""
    _configure_logging(verbose)


@cli.command()
@state_option
@click.option("--force", is_flag=True, help="Overwrite an existing snapshot.")
def init(state: Path, force: bool) -> None:
    """Create an empty ledger snapshot at clock 0."""
    if state.exists() and not force:
        raise CommandFailure(f"{state} already exists (use --force to overwrite)", EXIT_DOMAIN_ERROR)
    save_snapshot(Ledger(), state)


@cli.command("define-resource")
@click.argument("resource")
@click.option("--ttl", required=True, type=int, help="TTL in seconds.")
@click.option("--k", "bucket_count", required=True, type=int, help="Bucket count.")
@state_option
def define_resource(resource: str, ttl: int, bucket_count: int, state: Path) -> None:
    """Register a resource with its TTL and bucket count."""
    with _ledger_session(state) as ledger:
        ledger.define_resource(resource, ttl, bucket_count)


@cli.command()
@click.argument("timestamp", type=int)
@state_option
def advance(timestamp: int, state: Path) -> None:
    """Move the virtual clock forward to TIMESTAMP."""
    with _ledger_session(state) as ledger:
        ledger.advance_clock(timestamp)


@cli.command()
@click.argument("account")
@click.argument("resource")
@click.argument("amount", type=int)
@state_option
def mint(account: str, resource: str, amount: int, state: Path) -> None:
    """Deposit AMOUNT units into ACCOUNT at the current clock."""
    with _ledger_session(state) as ledger:
        cost = ledger.mint(account, resource, amount)
    logger.debug("mint cost: %s", cost)


@cli.command()
@click.argument("account")
@click.argument("resource")
@click.argument("amount", type=int)
@state_option
def burn(account: str, resource: str, amount: int, state: Path) -> None:
    """Consume AMOUNT units from ACCOUNT, earliest expiry first."""
    with _ledger_session(state) as ledger:
        cost = ledger.burn(account, resource, amount)
    logger.debug("burn cost: %s", cost)


@cli.command()
@click.argument("from_account")
@click.argument("to_account")
@click.argument("resource")
@click.argument("amount", type=int)
@state_option
def transfer(from_account: str, to_account: str, resource: str, amount: int, state: Path) -> None:
    """Move AMOUNT units between accounts, keeping their expirations."""
    with _ledger_session(state) as ledger:
        cost = ledger.transfer(from_account, to_account, resource, amount)
    logger.debug("transfer cost: %s", cost)


@cli.command()
@click.argument("account")
@click.argument("resource")
@state_option
def balance(account: str, resource: str, state: Path) -> None:
    """Print the valid balance at the current clock."""
    with _ledger_session(state, save=False) as ledger:
        click.echo(ledger.balance_of(account, resource))


@cli.command()
@click.argument("account")
@click.argument("resource")
@state_option
def records(account: str, resource: str, state: Path) -> None:
    """Print one 'amount expiresAt' line per stored record."""
    with _ledger_session(state, save=False) as ledger:
        for amount, expires_at in ledger.records_of(account, resource):
            click.echo(f"{amount} {expires_at}")


@cli.command()
@click.argument("account")
@click.argument("resource")
@state_option
def prune(account: str, resource: str, state: Path) -> None:
    """Drop expired records and print how many remain."""
    with _ledger_session(state) as ledger:
        ledger.prune(account, resource)
        remaining = ledger.record_count(account, resource)
    click.echo(remaining)


@cli.command("simulate-dos")
@click.option(
    "--deposits",
    type=click.IntRange(1, MAX_ATTACK_DEPOSITS),
    default=DEFAULT_ATTACK_DEPOSITS,
    show_default=True,
)
@click.option(
    "--strategy",
    type=click.Choice([s.value for s in TimingStrategy]),
    default=TimingStrategy.SPREAD_ACROSS_BUCKETS.value,
    show_default=True,
)
@click.option("--k", "bucket_count", type=int, default=DEFAULT_BUCKET_COUNT, show_default=True)
@click.option("--ttl", type=int, default=THIRTY_DAYS, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--amount", type=click.IntRange(1, AMOUNT_MAX), default=1, show_default=True)
@click.option("--trials", type=click.IntRange(min=1), default=1, show_default=True,
              help="Run several coalesced-only trials with seeds seed, seed+1, ...")
@click.option("--workers", type=click.IntRange(min=1), default=None, help="Process pool size.")
def simulate_dos(
    deposits: int,
    strategy: str,
    bucket_count: int,
    ttl: int,
    seed: int,
    amount: int,
    trials: int,
    workers: int | None,
) -> None:
    """Run the deposit attack and print a CSV report."""
    config = ResourceConfig.from_params(ttl, bucket_count)
    plan = AttackPlan(
        deposit_count=deposits,
        amount_per_deposit=amount,
        timing_strategy=TimingStrategy(strategy),
    )
    if trials == 1:
        paired = compare_with_unbounded(plan, config, seed)
        click.echo(render_attack_csv([paired]), nl=False)
        click.echo(summarize(paired), err=True, nl=False)
        return
    reports = run_trials(plan, config, range(seed, seed + trials), max_workers=workers)
    click.echo(render_attack_csv(reports), nl=False)
    for report in reports:
        click.echo(summarize(report), err=True, nl=False)


@cli.command("bench-costs")
@click.option("--k-values", required=True, callback=_parse_k_values, help="Comma-separated k list.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--fuzz-length", type=click.IntRange(min=2), default=2_000, show_default=True)
@click.option("--weighted", is_flag=True, help="Append a weighted-cost column.")
def bench_costs(k_values: list[int], seed: int, fuzz_length: int, weighted: bool) -> None:
    """Print worst-case and fuzzed operation costs as CSV."""
    rows = bench_cost_rows(k_values, seed, fuzz_length)
    click.echo(render_cost_csv(rows, CostWeights() if weighted else None), nl=False)


@cli.command()
@click.option("--ttl", type=int, required=True)
@click.option("--k-values", required=True, callback=_parse_k_values, help="Comma-separated k list.")
def tradeoff(ttl: int, k_values: list[int]) -> None:
    """Print the precision-versus-storage table for a TTL as CSV."""
    click.echo(render_tradeoff_csv(tradeoff_rows(ttl, k_values)), nl=False)


def cli_main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return its exit code instead of exiting.

    Exit codes: 0 success, 1 domain error, 2 usage error, 3 snapshot error.
    """
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        rv = cli.main(args=args, prog_name=PROG_NAME, standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_DOMAIN_ERROR
    return rv if isinstance(rv, int) else EXIT_OK


def run() -> None:
    sys.exit(cli_main())
