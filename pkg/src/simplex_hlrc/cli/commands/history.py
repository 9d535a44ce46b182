"""Run history command."""

import logging

import click
from rich.console import Console
from rich.table import Table
from sqlalchemy import desc

from simplex_hlrc.database.connection import get_database
from simplex_hlrc.database.models import AnalysisRun, ExperimentRun

logger = logging.getLogger(__name__)
console = Console()


def format_timestamp(value) -> str:
    return value.strftime("%Y-%m-%d %H:%M:%S")


def _analysis_table(runs: list[AnalysisRun]) -> Table:
    table = Table(title="Analyses", show_header=True)
    table.add_column("Timestamp", style="cyan")
    table.add_column("Code")
    table.add_column("Parameters", justify="right")
    table.add_column("Hierarchy")
    table.add_column("Verdict", justify="center")

    for run in reversed(runs):  # Show oldest first
        verdict = "[green]passed[/green]" if run.passed else "[red]failed[/red]"
        table.add_row(
            format_timestamp(run.timestamp),
            f"q={run.q} m={run.m} s={run.s}",
            f"{run.length},{run.dimension},{run.distance}",
            run.hierarchy or "N/A",
            verdict,
        )
    return table


def _experiment_table(runs: list[ExperimentRun]) -> Table:
    table = Table(title="Experiments", show_header=True)
    table.add_column("Timestamp", style="cyan")
    table.add_column("Code")
    table.add_column("Seed", justify="right")
    table.add_column("Failures", justify="right")
    table.add_column("Repaired", justify="right")
    table.add_column("Mean contacted", justify="right")

    for run in reversed(runs):
        table.add_row(
            format_timestamp(run.timestamp),
            f"q={run.q} m={run.m} s={run.s}",
            str(run.seed),
            str(run.failures),
            f"{run.successes}/{run.trials}",
            f"{run.mean_contacted:.2f}",
        )
    return table


@click.command("history")
@click.option(
    "--kind",
    type=click.Choice(["all", "analyses", "experiments"]),
    default="all",
    show_default=True,
    help="Which runs to list",
)
@click.option("--limit", "-n", default=20, help="Number of runs to show per kind")
@click.pass_context
def history_cmd(ctx, kind, limit):
    """List recorded analyses and experiments."""
    config = ctx.obj["config"]

    try:
        db = get_database(config.db_path)
        db.init_db()

        with db.session_scope() as session:
            analyses: list[AnalysisRun] = []
            experiments: list[ExperimentRun] = []
            if kind in ("all", "analyses"):
                analyses = (
                    session.query(AnalysisRun)
                    .order_by(desc(AnalysisRun.timestamp))
                    .limit(limit)
                    .all()
                )
            if kind in ("all", "experiments"):
                experiments = (
                    session.query(ExperimentRun)
                    .order_by(desc(ExperimentRun.timestamp))
                    .limit(limit)
                    .all()
                )

            if not analyses and not experiments:
                console.print("[yellow]No runs recorded yet.[/yellow]")
                return

            if analyses:
                console.print()
                console.print(_analysis_table(analyses))
            if experiments:
                console.print()
                console.print(_experiment_table(experiments))
            console.print()
            console.print(
                f"Showing {len(analyses)} analyses and {len(experiments)} experiments"
            )

    except Exception as e:
        logger.error(f"Failed to get history: {e}", exc_info=True)
        console.print(f"[red]Error:[/red] {e}")
        raise click.Abort()
