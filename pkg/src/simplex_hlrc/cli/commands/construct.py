"""Construct command."""

import logging
from pathlib import Path

import click

from simplex_hlrc.cli.options import code_options, resolve_spec
from simplex_hlrc.construction.simplex import punctured_simplex
from simplex_hlrc.errors import WorkbenchError
from simplex_hlrc.utils.formatting import format_params
from simplex_hlrc.utils.matrix_io import format_matrix, read_matrix, write_matrix

logger = logging.getLogger(__name__)


@click.command("construct")
@code_options
@click.option(
    "--out",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Write the generator matrix here instead of stdout",
)
@click.pass_context
def construct_cmd(ctx, q, m, s, out):
    """Build the generator matrix of S_q(m) - S_q(s)."""
    config = ctx.obj["config"]
    spec = resolve_spec(q, m, s)

    try:
        code = punctured_simplex(q, m, s)
        if out:
            path = write_matrix(code, config.resolve_output(out))
            if read_matrix(path) != code:
                raise WorkbenchError(f"{path} does not read back as {spec.label}")
            logger.info(f"Wrote {spec.label} to {path}")
            click.echo(format_params(spec.params))
        else:
            click.echo(format_matrix(code), nl=False)
            click.echo(format_params(spec.params), err=True)

    except Exception as e:
        logger.error(f"Construction failed: {e}", exc_info=True)
        click.echo(f"Error: {e}", err=True)
        raise click.Abort()
