"""Database models for recorded workbench runs."""

from datetime import datetime

from sqlalchemy import Boolean, DateTime, Float, Integer, String, Text
from sqlalchemy.orm import DeclarativeBase, Mapped, mapped_column


class Base(DeclarativeBase):
    """Base class for all database models."""

    pass


class AnalysisRun(Base):
    """One `analyze` invocation and its verdict."""

    __tablename__ = "analysis_runs"

    id: Mapped[int] = mapped_column(Integer, primary_key=True, autoincrement=True)
    timestamp: Mapped[datetime] = mapped_column(
        DateTime, nullable=False, default=datetime.now, index=True
    )

    # Code parameters
    q: Mapped[int] = mapped_column(Integer, nullable=False)
    m: Mapped[int] = mapped_column(Integer, nullable=False)
    s: Mapped[int] = mapped_column(Integer, nullable=False)
    length: Mapped[int] = mapped_column(Integer, nullable=False)
    dimension: Mapped[int] = mapped_column(Integer, nullable=False)
    distance: Mapped[int] = mapped_column(Integer, nullable=False)

    hierarchy: Mapped[str | None] = mapped_column(String(200), nullable=True)
    passed: Mapped[bool] = mapped_column(Boolean, nullable=False, index=True)
    failure: Mapped[str | None] = mapped_column(Text, nullable=True)
    report: Mapped[str] = mapped_column(Text, nullable=False)

    def __repr__(self) -> str:
        return (
            f"<AnalysisRun(id={self.id}, q={self.q}, m={self.m}, s={self.s}, "
            f"passed={self.passed})>"
        )


class ExperimentRun(Base):
    """Aggregate of one repair experiment at a single failure count."""

    __tablename__ = "experiment_runs"

    id: Mapped[int] = mapped_column(Integer, primary_key=True, autoincrement=True)
    timestamp: Mapped[datetime] = mapped_column(
        DateTime, nullable=False, default=datetime.now, index=True
    )

    q: Mapped[int] = mapped_column(Integer, nullable=False)
    m: Mapped[int] = mapped_column(Integer, nullable=False)
    s: Mapped[int] = mapped_column(Integer, nullable=False)
    seed: Mapped[int] = mapped_column(Integer, nullable=False)

    failures: Mapped[int] = mapped_column(Integer, nullable=False)
    trials: Mapped[int] = mapped_column(Integer, nullable=False)
    successes: Mapped[int] = mapped_column(Integer, nullable=False)
    mean_contacted: Mapped[float] = mapped_column(Float, nullable=False)
    max_contacted: Mapped[int] = mapped_column(Integer, nullable=False)
    escalation: Mapped[str | None] = mapped_column(
        String(200), nullable=True
    )  # "κ=2:980,κ=3:20"

    def __repr__(self) -> str:
        return (
            f"<ExperimentRun(id={self.id}, q={self.q}, m={self.m}, s={self.s}, "
            f"failures={self.failures}, {self.successes}/{self.trials})>"
        )
