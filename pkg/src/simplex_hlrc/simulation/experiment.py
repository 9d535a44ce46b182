"""Seeded repair experiments over random failure patterns."""

import logging
from collections import Counter
from dataclasses import dataclass, field

from simplex_hlrc.construction.simplex import PuncturedSimplexSpec
from simplex_hlrc.errors import InvalidArgs
from simplex_hlrc.simulation.cluster import build_cluster, inject_and_repair, make_rng

logger = logging.getLogger(__name__)


@dataclass
class FailureStats:
    """Aggregate over all trials with the same number of failed nodes."""

    failures: int
    trials: int = 0
    successes: int = 0
    contacted: Counter[int] = field(default_factory=Counter)
    escalation: Counter[str] = field(default_factory=Counter)

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials if self.trials else 0.0

    @property
    def max_contacted(self) -> int:
        return max(self.contacted, default=0)

    @property
    def mean_contacted(self) -> float:
        if not self.trials:
            return 0.0
        return sum(c * count for c, count in self.contacted.items()) / self.trials


@dataclass
class ExperimentStats:
    spec: PuncturedSimplexSpec
    seed: int
    trials: int
    by_failures: dict[int, FailureStats] = field(default_factory=dict)

    @property
    def all_succeeded(self) -> bool:
        return all(s.successes == s.trials for s in self.by_failures.values())


def run_experiment(
    spec: PuncturedSimplexSpec,
    trials: int,
    max_failures: int,
    seed: int,
    *,
    min_failures: int | None = None,
) -> ExperimentStats:
    """Repair ``trials`` random failure patterns per failure count.

    Each trial stores a fresh random codeword and erases distinct nodes drawn
    uniformly. The same seed reproduces every pattern and every statistic.

    Args:
        spec: Code to simulate
        trials: Trials per failure count, at least 1
        max_failures: Largest number of failed nodes
        seed: Seed of the PCG64 generator
        min_failures: First failure count of a sweep; defaults to max_failures

    Raises:
        InvalidArgs: If trials < 1 or the failure counts are outside [1, n]
    """
    if trials < 1:
        raise InvalidArgs(f"trials must be at least 1 (got {trials})")
    low = max_failures if min_failures is None else min_failures
    if not 1 <= low <= max_failures <= spec.length:
        raise InvalidArgs(
            f"failure counts must satisfy 1 <= {low} <= {max_failures} "
            f"<= n={spec.length}"
        )
    state = build_cluster(spec.q, spec.m, spec.s, seed)
    rng = make_rng(seed)
    stats = ExperimentStats(spec, seed, trials)
    for failures in range(low, max_failures + 1):
        bucket = FailureStats(failures)
        for _ in range(trials):
            state.reseed(rng)
            pattern = rng.choice(spec.length, size=failures, replace=False) + 1
            trace = inject_and_repair(state, frozenset(int(e) for e in pattern))
            bucket.trials += 1
            bucket.successes += int(trace.success)
            bucket.contacted[trace.contacted] += 1
            bucket.escalation.update(trace.escalation)
        stats.by_failures[failures] = bucket
        logger.info(
            f"{spec.label}: {failures} failures, "
            f"{bucket.successes}/{bucket.trials} repaired"
        )
    return stats
