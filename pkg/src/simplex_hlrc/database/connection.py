"""Run-store connection and initialization."""

import logging
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

from sqlalchemy import create_engine, func, select
from sqlalchemy.orm import Session, sessionmaker

from simplex_hlrc.database.models import AnalysisRun, Base, ExperimentRun

logger = logging.getLogger(__name__)


class Database:
    """SQLite store for recorded analyses and experiments.

    Tables are created lazily by :meth:`init_db`, which every writer calls, so
    ``--record`` works without a prior ``init``.
    """

    def __init__(self, db_path: Path):
        self.db_path = db_path
        self.engine = create_engine(f"sqlite:///{db_path}", echo=False)
        self.SessionLocal = sessionmaker(
            autocommit=False, autoflush=False, bind=self.engine
        )

    def init_db(self) -> None:
        """Create the run tables if they don't exist."""
        self.db_path.parent.mkdir(parents=True, exist_ok=True)
        Base.metadata.create_all(bind=self.engine)
        logger.debug(f"Run store ready at {self.db_path}")

    @contextmanager
    def session_scope(self) -> Iterator[Session]:
        """Session that rolls back on error and is always closed."""
        session = self.SessionLocal()
        try:
            yield session
        except Exception:
            session.rollback()
            raise
        finally:
            session.close()

    def run_counts(self) -> dict[str, int]:
        """Number of stored analyses and experiment rows."""
        with self.session_scope() as session:
            analyses = session.scalar(select(func.count(AnalysisRun.id)))
            experiments = session.scalar(select(func.count(ExperimentRun.id)))
        return {"analyses": analyses or 0, "experiments": experiments or 0}


def get_database(db_path: Path) -> Database:
    return Database(db_path)
