"""Cheatsheet command."""

import click
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

console = Console()


def _section(title: str, rows: list[tuple[str, str]], width: int = 40) -> None:
    table = Table(show_header=True, header_style="bold magenta", box=None)
    table.add_column("Command", style="cyan", width=width)
    table.add_column("Description", style="white")
    for command, description in rows:
        table.add_row(command, description)
    console.print()
    console.print(f"[bold yellow]{title}[/bold yellow]")
    console.print(table)


@click.command("cheatsheet")
def cheatsheet_cmd():
    """Show a cheatsheet of all available commands."""
    console.print()
    console.print(
        Panel.fit(
            "[bold cyan]simplex-hlrc Command Cheatsheet[/bold cyan]",
            border_style="cyan",
        )
    )

    _section(
        "Codes",
        [
            ("simplex-hlrc construct --m 4 --s 2", "Print the generator matrix"),
            ("simplex-hlrc construct --m 4 --s 2 --out G.txt", "Write it to a file"),
            ("simplex-hlrc analyze --m 4 --s 2", "Full report with cross-checks"),
            ("simplex-hlrc analyze --m 4 --s 2 --exhaustive", "Also type every flat"),
            ("simplex-hlrc table --m-max 6 --s-max 4", "Grid of binary codes"),
            ("simplex-hlrc table --csv", "Same grid as CSV"),
        ],
        width=48,
    )
    _section(
        "Bounds",
        [
            ("simplex-hlrc bounds --n 12 --d 6", "Griesmer and k_opt"),
            (
                'simplex-hlrc bounds --n 12 --d 6 --locality "3,3;2,2"',
                "Hierarchical bounds with binding λ",
            ),
        ],
        width=56,
    )
    _section(
        "Repair simulation",
        [
            ("simplex-hlrc simulate --m 4 --s 2", "One failure, 100 trials"),
            ("simplex-hlrc simulate --m 4 --s 2 --failures 5 --sweep", "Sweep 1..5"),
            ("simplex-hlrc simulate ... --seed 7 --record", "Reproducible, stored"),
        ],
        width=56,
    )
    _section(
        "Setup & History",
        [
            ("simplex-hlrc init", "Create the run database"),
            ("simplex-hlrc history", "List recorded runs"),
            ("simplex-hlrc history --kind experiments -n 5", "Last 5 experiments"),
        ],
        width=48,
    )
    _section(
        "Global Options",
        [
            ("-v, --verbose", "Enable verbose logging"),
            ("--db-path PATH", "Override database path"),
            ("--help", "Show help for any command"),
        ],
        width=20,
    )

    console.print()
    console.print(
        Panel(
            """• Exit code 1 means a cross-check failed, 2 means bad arguments
• Relative --out paths resolve against $SIMPLEX_HLRC_OUTPUT_DIR if set
• Use [cyan]simplex-hlrc \\[command] --help[/cyan] for detailed help""",
            title="[bold]Tips[/bold]",
            border_style="blue",
        )
    )
    console.print()
