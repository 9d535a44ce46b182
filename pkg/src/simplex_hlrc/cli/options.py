"""Options shared by the commands that take a punctured Simplex code."""

import click

from simplex_hlrc.construction.simplex import PuncturedSimplexSpec
from simplex_hlrc.errors import WorkbenchError


def code_options(func):
    """Add --q, --m and --s to a command."""
    func = click.option(
        "--s",
        "s",
        type=int,
        default=0,
        show_default=True,
        help="Deleted Simplex dimension",
    )(func)
    func = click.option("--m", "m", type=int, required=True, help="Ambient dimension")(
        func
    )
    func = click.option(
        "--q", "q", type=int, default=2, show_default=True, help="Field order"
    )(func)
    return func


def resolve_spec(q: int, m: int, s: int) -> PuncturedSimplexSpec:
    """Validate (q, m, s), reporting violations as usage errors (exit code 2)."""
    try:
        return PuncturedSimplexSpec(q, m, s)
    except WorkbenchError as e:
        raise click.BadParameter(str(e), param_hint="--q/--m/--s") from e
