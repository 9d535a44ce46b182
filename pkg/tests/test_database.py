"""Tests for the run database."""

import pytest

from simplex_hlrc.construction.simplex import PuncturedSimplexSpec
from simplex_hlrc.database.connection import Database
from simplex_hlrc.database.models import AnalysisRun, ExperimentRun
from simplex_hlrc.database.recorder import record_analysis, record_experiment
from simplex_hlrc.simulation.experiment import run_experiment


@pytest.fixture
def session(tmp_path):
    db = Database(tmp_path / "nested" / "x.db")
    db.init_db()
    with db.session_scope() as session:
        yield session


def test_init_creates_parent_directory(tmp_path):
    db = Database(tmp_path / "a" / "b" / "runs.db")
    db.init_db()
    assert (tmp_path / "a" / "b" / "runs.db").exists()


def test_record_analysis(session, spec_4_2):
    run = record_analysis(
        session,
        spec_4_2,
        "schema_version: 1\n",
        passed=True,
        hierarchy="[(3,3),(2,2)]",
    )
    assert run.id is not None
    stored = session.query(AnalysisRun).one()
    assert (stored.length, stored.dimension, stored.distance) == (12, 4, 6)
    assert stored.passed
    assert stored.failure is None
    assert stored.report == "schema_version: 1\n"


def test_record_experiment_one_row_per_failure_count(session):
    stats = run_experiment(PuncturedSimplexSpec(2, 4, 2), 10, 3, 7, min_failures=1)
    runs = record_experiment(session, stats)
    assert [run.failures for run in runs] == [1, 2, 3]

    stored = session.query(ExperimentRun).order_by(ExperimentRun.failures).all()
    assert len(stored) == 3
    first = stored[0]
    assert (first.seed, first.trials, first.successes) == (7, 10, 10)
    assert first.max_contacted == 2
    assert first.escalation == "κ=2:10"


def test_run_counts(tmp_path, spec_4_2):
    db = Database(tmp_path / "runs.db")
    db.init_db()
    assert db.run_counts() == {"analyses": 0, "experiments": 0}
    with db.session_scope() as session:
        record_analysis(session, spec_4_2, "x\n", passed=False, failure="hierarchy")
    assert db.run_counts() == {"analyses": 1, "experiments": 0}


def test_session_scope_rolls_back(tmp_path):
    db = Database(tmp_path / "runs.db")
    db.init_db()
    with pytest.raises(RuntimeError):
        with db.session_scope() as session:
            session.add(
                AnalysisRun(
                    q=2, m=4, s=2, length=12, dimension=4, distance=6,
                    passed=True, report="x",
                )
            )
            session.flush()
            raise RuntimeError("boom")
    assert db.run_counts()["analyses"] == 0
