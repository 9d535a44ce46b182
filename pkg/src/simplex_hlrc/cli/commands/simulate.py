"""Simulate command: seeded node-failure and repair experiments."""

import logging

import click
from rich.console import Console
from rich.table import Table

from simplex_hlrc.cli.options import code_options, resolve_spec
from simplex_hlrc.database.connection import get_database
from simplex_hlrc.database.recorder import record_experiment
from simplex_hlrc.errors import InvalidArgs
from simplex_hlrc.simulation.experiment import run_experiment
from simplex_hlrc.utils.formatting import format_rate

logger = logging.getLogger(__name__)
console = Console()


def get_rate_color(successes: int, trials: int) -> str:
    """Rich color for a repair success rate."""
    if successes == trials:
        return "green"
    elif successes == 0:
        return "red"
    else:
        return "yellow"


@click.command("simulate")
@code_options
@click.option("--failures", type=int, default=1, show_default=True, help="Failed nodes")
@click.option("--trials", type=int, default=100, show_default=True, help="Trials")
@click.option("--seed", type=int, default=0, show_default=True, help="PCG64 seed")
@click.option("--sweep", is_flag=True, help="Run every failure count from 1 up")
@click.option("--record", is_flag=True, help="Store the statistics in the database")
@click.pass_context
def simulate_cmd(ctx, q, m, s, failures, trials, seed, sweep, record):
    """Erase random nodes of S_q(m) - S_q(s) and repair them innermost-first."""
    config = ctx.obj["config"]
    spec = resolve_spec(q, m, s)

    try:
        stats = run_experiment(
            spec, trials, failures, seed, min_failures=1 if sweep else None
        )
    except InvalidArgs as e:
        raise click.BadParameter(str(e)) from e

    try:
        table = Table(
            title=f"Repair of {spec.label}, seed {seed}", show_header=True
        )
        table.add_column("Failures", justify="right")
        table.add_column("Repaired", justify="right")
        table.add_column("Contacted", justify="right")
        table.add_column("Levels")

        for count, bucket in sorted(stats.by_failures.items()):
            color = get_rate_color(bucket.successes, bucket.trials)
            contacted = ", ".join(
                f"{c}x{n}" for c, n in sorted(bucket.contacted.items())
            )
            levels = ", ".join(
                f"{level}:{n}" for level, n in sorted((+bucket.escalation).items())
            )
            table.add_row(
                str(count),
                f"[{color}]{bucket.successes}/{bucket.trials}[/{color}]",
                contacted,
                levels or "-",
            )

        console.print()
        console.print(table)
        console.print()
        for count, bucket in sorted(stats.by_failures.items()):
            console.print(
                f"failures={count}: repaired "
                f"{format_rate(bucket.successes, bucket.trials)}, "
                f"max contacted {bucket.max_contacted}"
            )

        if record:
            db = get_database(config.db_path)
            db.init_db()
            with db.session_scope() as session:
                record_experiment(session, stats)

    except Exception as e:
        logger.error(f"Simulation failed: {e}", exc_info=True)
        console.print(f"[red]Error:[/red] {e}")
        raise click.Abort()
