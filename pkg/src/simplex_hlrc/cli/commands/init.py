"""Create the simplex-hlrc run store and configuration directory."""

import logging

import click
from rich.console import Console
from rich.panel import Panel

from simplex_hlrc.database.connection import get_database

logger = logging.getLogger(__name__)
console = Console()


@click.command("init")
@click.pass_context
def init_cmd(ctx):
    """Create the run database, its tables and the config directory."""
    config = ctx.obj["config"]

    try:
        config.ensure_directories()
        db = get_database(config.db_path)
        db.init_db()
        counts = db.run_counts()
    except Exception as e:
        logger.error(f"Initialization failed: {e}", exc_info=True)
        console.print(f"[red]Error:[/red] {e}")
        raise click.Abort()

    stored = f"{counts['analyses']} analyses, {counts['experiments']} experiment rows"
    console.print(
        Panel.fit(
            f"""[green]Run store ready[/green] ({stored})

Database: [cyan]{config.db_path}[/cyan]
Config:   [cyan]{config.config_path.parent}[/cyan]
Output:   [cyan]{config.output_dir}[/cyan]

Record runs with [yellow]--record[/yellow] on analyze and simulate,
then list them with [yellow]simplex-hlrc history[/yellow].""",
            title="simplex-hlrc init",
            border_style="green",
        )
    )
