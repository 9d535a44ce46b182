"""Main CLI entry point for simplex-hlrc."""

import logging
import sys
from pathlib import Path

import click

from simplex_hlrc.config import get_config

# Configure logging
logging.basicConfig(
    level=logging.WARNING,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)


@click.group()
@click.option(
    "--db-path",
    type=click.Path(path_type=Path),
    help="Path to run database (overrides default)",
)
@click.option(
    "--verbose",
    "-v",
    is_flag=True,
    help="Enable verbose logging",
)
@click.pass_context
def cli(ctx, db_path, verbose):
    """Punctured Simplex codes and their hierarchical locality."""
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    config = get_config()
    if db_path:
        config.db_path = db_path

    ctx.ensure_object(dict)
    ctx.obj["config"] = config


def register_commands() -> click.Group:
    """Attach every subcommand to the group."""
    # Import commands here to avoid circular imports
    from simplex_hlrc.cli.commands import (
        analyze,
        bounds,
        cheatsheet,
        construct,
        history,
        init,
        simulate,
        table,
    )

    cli.add_command(init.init_cmd)
    cli.add_command(construct.construct_cmd)
    cli.add_command(analyze.analyze_cmd)
    cli.add_command(table.table_cmd)
    cli.add_command(bounds.bounds_cmd)
    cli.add_command(simulate.simulate_cmd)
    cli.add_command(history.history_cmd)
    cli.add_command(cheatsheet.cheatsheet_cmd)
    return cli


def main():
    """Main entry point."""
    register_commands()
    try:
        cli(obj={})
    except Exception as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
