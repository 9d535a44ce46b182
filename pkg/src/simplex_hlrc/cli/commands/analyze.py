"""Analyze command: full structured report on one punctured Simplex code."""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import click
from rich.console import Console

from simplex_hlrc.algebra.codes import weight_enumerator_bruteforce
from simplex_hlrc.bounds.optimality import optimality_report
from simplex_hlrc.cli.options import code_options, resolve_spec
from simplex_hlrc.config import REPORT_SCHEMA_VERSION
from simplex_hlrc.construction.simplex import PuncturedSimplexSpec, punctured_simplex
from simplex_hlrc.database.connection import get_database
from simplex_hlrc.database.recorder import record_analysis
from simplex_hlrc.errors import EnumerationCapExceeded, WorkbenchError
from simplex_hlrc.locality.classifier import classify_flats, classify_hyperplanes
from simplex_hlrc.locality.enumerator import weight_enumerator_formula
from simplex_hlrc.locality.local_sets import local_set_coverage
from simplex_hlrc.locality.profile import locality_profile
from simplex_hlrc.locality.verification import chain_sets, verify_hlrc
from simplex_hlrc.utils.formatting import format_enumerator, format_params, format_set
from simplex_hlrc.utils.report_format import render_report

logger = logging.getLogger(__name__)
console = Console()


@dataclass
class Analysis:
    """Report tree plus the outcome of every internal cross-check."""

    spec: PuncturedSimplexSpec
    report: dict[str, Any] = field(default_factory=dict)
    checks: dict[str, bool] = field(default_factory=dict)
    failure: str | None = None

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks[name] = ok
        if not ok and self.failure is None:
            self.failure = f"{name}: {detail}" if detail else name

    @property
    def passed(self) -> bool:
        return self.failure is None


def _enumerators(analysis: Analysis) -> dict[str, Any]:
    spec = analysis.spec
    formula = weight_enumerator_formula(spec.q, spec.m, spec.s)
    section: dict[str, Any] = {"formula": format_enumerator(formula)}
    try:
        brute = weight_enumerator_bruteforce(punctured_simplex(spec.q, spec.m, spec.s))
    except EnumerationCapExceeded as e:
        logger.warning(f"Skipping brute-force enumeration: {e}")
        section["brute_force"] = None
        return section
    section["brute_force"] = format_enumerator(brute)
    section["match"] = brute == formula
    analysis.check("weight enumerator", brute == formula, "formula != brute force")
    analysis.check(
        "minimum distance",
        brute.min_distance == spec.distance,
        f"{brute.min_distance} != {spec.distance}",
    )
    return section


def _locality(analysis: Analysis, exhaustive: bool) -> None:
    spec = analysis.spec
    q, m, s = spec.q, spec.m, spec.s
    code = punctured_simplex(q, m, s)
    profile = locality_profile(q, m, s, with_chains=True)
    report = analysis.report

    report["restriction_types"] = {
        f"kappa={kappa}": [str(t) for t in types]
        for kappa, types in profile.types.items()
    }
    report["localities"] = [
        {
            "type": str(loc.rtype),
            "r_size": loc.r_size,
            "r_dimension": loc.r_dimension,
            "delta": loc.delta,
        }
        for loc in profile.localities
    ]

    hyperplanes = classify_hyperplanes(q, m, s)
    report["hyperplanes"] = {str(t): c.count for t, c in hyperplanes.items()}

    params = profile.hierarchy
    hierarchy: dict[str, Any] = {"parameters": str(params) if params else None}
    if profile.hierarchy is not None:
        chains = {e: chain_sets(links) for e, links in profile.chains.items()}
        verdict = verify_hlrc(code, chains, profile.hierarchy)
        hierarchy["levels"] = profile.hierarchy.height
        hierarchy["chain_of_symbol_1"] = [
            f"{link.rtype.label} {format_set(link.members)}"
            for link in profile.chains[1]
        ]
        hierarchy["verified"] = verdict.ok
        hierarchy["witness"] = verdict.witness
        analysis.check("hierarchy", verdict.ok, verdict.witness or "")
    report["hierarchy"] = hierarchy

    bounds = optimality_report(q, m, s)
    report["bounds"] = [
        {
            "name": record.name,
            "cites": record.cites,
            "inputs": ",".join(f"{k}={v}" for k, v in record.inputs.items()),
            "value": record.value,
            "binding_lambda": record.binding_lambda,
            "verdict": record.verdict,
        }
        for record in bounds.records
    ]
    analysis.check("optimality", bounds.optimal, bounds.witness or "")

    if exhaustive:
        coverage = local_set_coverage(code, spec)
        complete = all(count == code.n for count in coverage.values())
        typed = classify_flats(q, m, s)
        report["exhaustive"] = {
            "local_set_coverage": {
                f"S({kappa})-S({i})": count for (kappa, i), count in coverage.items()
            },
            "typed_closed_sets": len(typed),
        }
        analysis.check("local set coverage", complete, str(coverage))


def build_analysis(spec: PuncturedSimplexSpec, *, exhaustive: bool = False) -> Analysis:
    """Run every cross-check on ``spec`` and assemble the report tree.

    Localities, hierarchy and bounds need m >= 3 and are omitted below that.
    """
    analysis = Analysis(spec)
    report = analysis.report
    report["schema_version"] = REPORT_SCHEMA_VERSION
    report["code"] = {
        "q": spec.q,
        "m": spec.m,
        "s": spec.s,
        "label": spec.label,
        "reed_muller": spec.is_reed_muller,
    }
    report["parameters"] = format_params(spec.params)
    report["weight_enumerator"] = _enumerators(analysis)
    if spec.m >= 3:
        try:
            _locality(analysis, exhaustive)
        except WorkbenchError as e:
            logger.error(f"Analysis of {spec.label} failed: {e}", exc_info=True)
            analysis.check(type(e).__name__, False, str(e))
    report["verdict"] = {
        "passed": analysis.passed,
        "checks": dict(analysis.checks),
        "failure": analysis.failure,
    }
    return analysis


@click.command("analyze")
@code_options
@click.option(
    "--out",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Also write the report to this file",
)
@click.option("--record", is_flag=True, help="Store the report in the run database")
@click.option(
    "--exhaustive",
    is_flag=True,
    help="Also type every closed set and check per-symbol local sets",
)
@click.pass_context
def analyze_cmd(ctx, q, m, s, out, record, exhaustive):
    """Report parameters, locality, hierarchy and bounds of S_q(m) - S_q(s)."""
    config = ctx.obj["config"]
    spec = resolve_spec(q, m, s)

    try:
        analysis = build_analysis(spec, exhaustive=exhaustive)
        text = render_report(analysis.report)
        click.echo(text, nl=False)

        if out:
            path = config.resolve_output(out)
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding="utf-8")
            logger.info(f"Wrote report to {path}")

        if record:
            db = get_database(config.db_path)
            db.init_db()
            hierarchy = analysis.report.get("hierarchy", {}).get("parameters")
            with db.session_scope() as session:
                record_analysis(
                    session,
                    spec,
                    text,
                    passed=analysis.passed,
                    hierarchy=hierarchy,
                    failure=analysis.failure,
                )

    except Exception as e:
        logger.error(f"Analysis failed: {e}", exc_info=True)
        console.print(f"[red]Error:[/red] {e}")
        raise click.Abort()

    if not analysis.passed:
        console.print(f"[red]Cross-check failed:[/red] {analysis.failure}")
        ctx.exit(1)
