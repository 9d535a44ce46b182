"""Store analysis and experiment results in the run database."""

import logging
from datetime import datetime

from sqlalchemy.orm import Session

from simplex_hlrc.construction.simplex import PuncturedSimplexSpec
from simplex_hlrc.database.models import AnalysisRun, ExperimentRun
from simplex_hlrc.simulation.experiment import ExperimentStats

logger = logging.getLogger(__name__)


def record_analysis(
    db_session: Session,
    spec: PuncturedSimplexSpec,
    report_text: str,
    *,
    passed: bool,
    hierarchy: str | None = None,
    failure: str | None = None,
) -> AnalysisRun:
    """Store one rendered analysis report.

    Returns:
        The stored AnalysisRun object
    """
    n, k, d = spec.params
    run = AnalysisRun(
        timestamp=datetime.now(),
        q=spec.q,
        m=spec.m,
        s=spec.s,
        length=n,
        dimension=k,
        distance=d,
        hierarchy=hierarchy,
        passed=passed,
        failure=failure,
        report=report_text,
    )
    db_session.add(run)
    db_session.commit()
    db_session.refresh(run)
    logger.info(f"Recorded analysis of {spec.label}: passed={passed}")
    return run


def record_experiment(
    db_session: Session, stats: ExperimentStats
) -> list[ExperimentRun]:
    """Store one row per failure count of an experiment.

    Returns:
        The stored ExperimentRun objects, in failure-count order
    """
    spec = stats.spec
    runs = []
    for failures, bucket in sorted(stats.by_failures.items()):
        escalation = ",".join(
            f"{level}:{count}" for level, count in sorted(bucket.escalation.items())
        )
        runs.append(
            ExperimentRun(
                timestamp=datetime.now(),
                q=spec.q,
                m=spec.m,
                s=spec.s,
                seed=stats.seed,
                failures=failures,
                trials=bucket.trials,
                successes=bucket.successes,
                mean_contacted=bucket.mean_contacted,
                max_contacted=bucket.max_contacted,
                escalation=escalation or None,
            )
        )
    db_session.add_all(runs)
    db_session.commit()
    for run in runs:
        db_session.refresh(run)
    logger.info(f"Recorded {len(runs)} experiment rows for {spec.label}")
    return runs
