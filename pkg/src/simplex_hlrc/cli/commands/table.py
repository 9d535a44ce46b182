"""Table command: the grid of punctured Simplex codes and their restriction edges."""

import csv
import io
import logging
from dataclasses import dataclass

import click
from rich.console import Console
from rich.table import Table

from simplex_hlrc.construction.simplex import PuncturedSimplexSpec
from simplex_hlrc.errors import WorkbenchError
from simplex_hlrc.locality.classifier import classify_hyperplanes
from simplex_hlrc.utils.formatting import format_params

logger = logging.getLogger(__name__)
console = Console()


@dataclass(frozen=True)
class TableEntry:
    spec: PuncturedSimplexSpec
    edges: tuple[tuple[int, int, int], ...]

    @property
    def params(self) -> str:
        return format_params(self.spec.params)

    @property
    def edge_labels(self) -> str:
        return " ".join(format_params(edge) for edge in self.edges)


def restriction_edges(spec: PuncturedSimplexSpec) -> tuple[tuple[int, int, int], ...]:
    """Parameters of the dimension-(m-1) restrictions that actually occur."""
    if spec.m < 3:
        return ()
    classes = classify_hyperplanes(spec.q, spec.m, spec.s)
    return tuple(t.params for t, found in classes.items() if found.count)


def table_entries(q: int, m_max: int, s_max: int) -> list[TableEntry]:
    """Every S_q(m) - S_q(s) with 2 <= m <= m_max, s <= min(s_max, m-1), d >= 2.

    Raises:
        UnsupportedOrder: If q is not a supported field order
    """
    entries = []
    for m in range(2, m_max + 1):
        for s in range(0, min(s_max, m - 1) + 1):
            spec = PuncturedSimplexSpec(q, m, s)
            if spec.distance < 2:
                continue
            entries.append(TableEntry(spec, restriction_edges(spec)))
    logger.debug(f"Tabulated {len(entries)} codes over GF({q})")
    return entries


def format_csv(entries: list[TableEntry]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["q", "m", "s", "n", "k", "d", "reed_muller", "restrictions"])
    for entry in entries:
        spec = entry.spec
        writer.writerow(
            [
                spec.q,
                spec.m,
                spec.s,
                *spec.params,
                int(spec.is_reed_muller),
                entry.edge_labels,
            ]
        )
    return buffer.getvalue()


@click.command("table")
@click.option("--q", "q", type=int, default=2, show_default=True, help="Field order")
@click.option("--m-max", type=int, default=6, show_default=True, help="Largest m")
@click.option("--s-max", type=int, default=4, show_default=True, help="Largest s")
@click.option("--csv", "as_csv", is_flag=True, help="Print CSV instead of a table")
def table_cmd(q, m_max, s_max, as_csv):
    """Tabulate [n,k,d] of S_q(m) - S_q(s) with restriction edges."""
    if m_max < 2 or s_max < 0:
        raise click.BadParameter("need --m-max >= 2 and --s-max >= 0")

    try:
        entries = table_entries(q, m_max, s_max)
    except WorkbenchError as e:
        raise click.BadParameter(str(e), param_hint="--q") from e
    except Exception as e:
        logger.error(f"Failed to build table: {e}", exc_info=True)
        console.print(f"[red]Error:[/red] {e}")
        raise click.Abort()

    if as_csv:
        click.echo(format_csv(entries), nl=False)
        return

    table = Table(title=f"Punctured Simplex codes over GF({q})", show_header=True)
    table.add_column("m", justify="right")
    table.add_column("s", justify="right")
    table.add_column("Code", style="cyan")
    table.add_column("Parameters", justify="right")
    table.add_column("Restrictions (dim m-1)")

    for entry in entries:
        params = entry.params
        if entry.spec.is_reed_muller:
            params = f"[blue]{params}[/blue] RM"
        table.add_row(
            str(entry.spec.m),
            str(entry.spec.s),
            entry.spec.label,
            params,
            entry.edge_labels or "-",
        )

    console.print()
    console.print(table)
    console.print()
    console.print(f"Showing {len(entries)} codes; RM marks first-order Reed-Muller")
