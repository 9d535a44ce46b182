"""Bounds command: evaluate the dimension and distance bounds for given parameters."""

import logging

import click
from rich.console import Console

from simplex_hlrc.bounds.classical import cmg_bound, griesmer, k_opt
from simplex_hlrc.bounds.hierarchical import (
    cm_hlrc_bound,
    lemma_size_bound,
    parse_locality,
    singleton_hlrc,
)
from simplex_hlrc.errors import LocalityParseError, WorkbenchError

logger = logging.getLogger(__name__)
console = Console()


def _lambdas(values: tuple[int, ...]) -> str:
    return ", ".join(str(v) for v in values)


@click.command("bounds")
@click.option("--q", "q", type=int, default=2, show_default=True, help="Field order")
@click.option("--n", "n", type=int, required=True, help="Code length")
@click.option("--d", "d", type=int, required=True, help="Minimum distance")
@click.option(
    "--locality",
    default="",
    help='Hierarchical locality "r1,d1;r2,d2;..." (dimension convention)',
)
@click.option(
    "--k",
    "k",
    type=int,
    default=None,
    help="Dimension for the Singleton-type bound (default: the dimension bound)",
)
def bounds_cmd(q, n, d, locality, k):
    """Evaluate Griesmer, k_opt and the (hierarchical) locality bounds."""
    if n < 1 or d < 1 or d > n:
        raise click.BadParameter(f"need 1 <= d <= n (got n={n}, d={d})")
    try:
        params = parse_locality(locality)
    except LocalityParseError as e:
        raise click.BadParameter(str(e), param_hint="--locality") from e

    try:
        best = k_opt(q, n, d)
        console.print(f"[bold]k_opt[/bold] (Griesmer inversion): {best}")
        if best:
            console.print(
                f"[bold]griesmer[/bold] G_{q}({best},{d}) = {griesmer(q, best, d)}"
                f" <= n={n}"
            )
        if params is None:
            return

        console.print(f"[bold]locality[/bold] {params}")
        for level, (r, delta) in enumerate(params.levels, start=1):
            if delta < 2:
                continue
            cmg = cmg_bound(q, n, d, r, delta)
            console.print(
                f"[bold]cmg[/bold] level {level} (kappa={r}, delta={delta}): "
                f"{cmg.value} (binding λ: {_lambdas(cmg.binding_lambdas)})"
            )

        hlrc = cm_hlrc_bound(q, n, d, params)
        console.print(
            f"[bold]cm_hlrc[/bold] = {hlrc.value} "
            f"(binding λ: {_lambdas(hlrc.binding_lambdas)})"
        )
        dimension = hlrc.value if k is None else k
        if 1 <= dimension <= n:
            singleton = singleton_hlrc(n, dimension, params)
            console.print(
                f"[bold]singleton[/bold] d-bound for k={dimension}: {singleton}"
                f" (nu(k-1)={lemma_size_bound(params, dimension - 1)})"
            )
            if d > singleton:
                console.print(
                    f"[yellow]d={d} exceeds the Singleton-type bound[/yellow]"
                )

    except WorkbenchError as e:
        logger.error(f"Bound evaluation failed: {e}", exc_info=True)
        console.print(f"[red]Error:[/red] {e}")
        raise click.Abort()
