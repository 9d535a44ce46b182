"""Evaluate every bound against S_q(m) - S_q(s) and record optimality verdicts."""

import logging
from dataclasses import dataclass, field
from typing import Any

from simplex_hlrc.bounds.classical import abhmt_bound, cmg_bound, griesmer, k_opt
from simplex_hlrc.bounds.hierarchical import cm_hlrc_bound, singleton_hlrc
from simplex_hlrc.construction.simplex import PuncturedSimplexSpec
from simplex_hlrc.errors import InvalidArgs
from simplex_hlrc.locality.profile import LocalityProfile, locality_profile

logger = logging.getLogger(__name__)

OPTIMAL = "optimal"
NOT_OPTIMAL = "not optimal"
MEETS = "meets"
SATISFIED = "satisfied"
VIOLATED = "violated"
SINGLETON_ACHIEVING = "Singleton-achieving"
ALPHABET_OPTIMAL_ONLY = "not Singleton-achieving, alphabet-optimal"


@dataclass(frozen=True)
class BoundRecord:
    """One bound evaluation.

    ``cites`` names the bound that produced ``value``; ``ok`` is False only when
    the code contradicts the verdict it is expected to reach.
    """

    name: str
    cites: str
    inputs: dict[str, Any]
    value: int
    verdict: str
    ok: bool = True
    binding_lambda: int | None = None
    binding_lambdas: tuple[int, ...] = ()


@dataclass(frozen=True)
class BoundReport:
    spec: PuncturedSimplexSpec
    records: tuple[BoundRecord, ...]
    profile: LocalityProfile = field(repr=False)

    @property
    def optimal(self) -> bool:
        return all(record.ok for record in self.records)

    @property
    def witness(self) -> str | None:
        for record in self.records:
            if not record.ok:
                return (
                    f"{record.name} {record.inputs}: {record.value} ({record.verdict})"
                )
        return None

    def by_name(self, name: str) -> list[BoundRecord]:
        return [record for record in self.records if record.name == name]


def _dimension_verdict(value: int, k: int) -> tuple[str, bool]:
    if value == k:
        return OPTIMAL, True
    if value > k:
        return NOT_OPTIMAL, False
    return VIOLATED, False


def optimality_report(q: int, m: int, s: int) -> BoundReport:
    """Check S_q(m) - S_q(s) against the classical and hierarchical bounds.

    Every locality of the profile is checked with the Griesmer-based LRC bound
    (dimension convention) and the ABHMT bound (size convention). The hierarchy
    chain is checked with the alphabet-dependent H-LRC bound and contrasted with
    the Singleton-type bound on d.

    Raises:
        InvalidArgs: If m < 3
    """
    if m < 3:
        raise InvalidArgs(f"optimality_report needs m >= 3 (got {m})")
    profile = locality_profile(q, m, s)
    spec = profile.spec
    n, k, d = spec.params
    records: list[BoundRecord] = []

    length = griesmer(q, k, d)
    records.append(
        BoundRecord(
            "griesmer",
            "Griesmer bound G_q(k, d)",
            {"q": q, "k": k, "d": d},
            length,
            MEETS if length == n else SATISFIED,
            ok=length <= n,
        )
    )
    best = k_opt(q, n, d)
    records.append(
        BoundRecord(
            "k_opt",
            "Griesmer inversion",
            {"q": q, "n": n, "d": d},
            best,
            *_dimension_verdict(best, k),
        )
    )

    for locality in profile.localities:
        kappa, delta = locality.r_dimension, locality.delta
        cmg = cmg_bound(q, n, d, kappa, delta)
        records.append(
            BoundRecord(
                "cmg",
                "Griesmer-based LRC bound",
                {"q": q, "n": n, "d": d, "kappa": kappa, "delta": delta},
                cmg.value,
                *_dimension_verdict(cmg.value, k),
                binding_lambda=cmg.binding_lambda,
                binding_lambdas=cmg.binding_lambdas,
            )
        )
        r = locality.r_size
        abhmt = abhmt_bound(q, n, d, r, delta)
        records.append(
            BoundRecord(
                "abhmt",
                "ABHMT LRC bound",
                {"q": q, "n": n, "d": d, "r": r, "delta": delta},
                abhmt,
                SATISFIED if abhmt >= k else VIOLATED,
                ok=abhmt >= k,
            )
        )

    hierarchy = profile.hierarchy
    if hierarchy is not None:
        hlrc = cm_hlrc_bound(q, n, d, hierarchy)
        verdict, ok = _dimension_verdict(hlrc.value, k)
        records.append(
            BoundRecord(
                "cm_hlrc",
                "alphabet-dependent H-LRC bound",
                {"q": q, "n": n, "d": d, "locality": str(hierarchy)},
                hlrc.value,
                verdict,
                ok=ok,
                binding_lambda=hlrc.binding_lambda,
                binding_lambdas=hlrc.binding_lambdas,
            )
        )
        singleton = singleton_hlrc(n, k, hierarchy)
        if d == singleton:
            contrast = SINGLETON_ACHIEVING
        elif d < singleton:
            contrast = ALPHABET_OPTIMAL_ONLY if ok else NOT_OPTIMAL
        else:
            contrast = VIOLATED
        records.append(
            BoundRecord(
                "singleton",
                "Singleton-type H-LRC bound on d",
                {"n": n, "k": k, "locality": str(hierarchy)},
                singleton,
                contrast,
                ok=d <= singleton,
            )
        )

    report = BoundReport(spec, tuple(records), profile)
    if report.optimal:
        logger.info(f"{spec.label} {list(spec.params)}: all bounds met")
    else:
        logger.warning(f"{spec.label}: {report.witness}")
    return report
