"""Complete locality profile of S_q(m) - S_q(s).

Only localities realized by closed repair sets are listed.
"""

import logging
from dataclasses import dataclass, field

from simplex_hlrc.bounds.hierarchical import HierLocalityParams
from simplex_hlrc.construction.simplex import PuncturedSimplexSpec, punctured_simplex
from simplex_hlrc.errors import InvalidArgs
from simplex_hlrc.locality.local_sets import ChainLink, all_chains, chain_levels
from simplex_hlrc.locality.restriction_types import (
    RestrictionType,
    restriction_type_range,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Locality:
    """An LRC locality offered by one restriction type, in both conventions."""

    rtype: RestrictionType

    @property
    def delta(self) -> int:
        return self.rtype.distance

    @property
    def r_size(self) -> int:
        """r with |R| <= r + delta - 1."""
        return self.rtype.length - self.delta + 1

    @property
    def r_dimension(self) -> int:
        """r with H(R) <= r."""
        return self.rtype.kappa

    def __str__(self) -> str:
        return f"(r={self.r_size}, delta={self.delta})"


@dataclass(frozen=True)
class LocalityProfile:
    """Restriction types, localities and hierarchy of one punctured Simplex code."""

    spec: PuncturedSimplexSpec
    types: dict[int, tuple[RestrictionType, ...]]
    localities: tuple[Locality, ...]
    hierarchy: HierLocalityParams | None
    chains: dict[int, list[ChainLink]] = field(default_factory=dict, repr=False)
    closed_sets_only: bool = True


def hierarchy_parameters(spec: PuncturedSimplexSpec) -> HierLocalityParams | None:
    """[(kappa, delta_kappa)] from kappa = m-1 down to the innermost level.

    delta_kappa = q^(kappa-1) when kappa <= m-s, and q^(kappa-1) - q^(s-m+kappa-1)
    otherwise. None when no level has distance 2 or more.
    """
    levels = chain_levels(spec)
    if not levels:
        return None
    return HierLocalityParams.of((t.kappa, t.distance) for t in levels)


def locality_profile(
    q: int, m: int, s: int, *, with_chains: bool = False
) -> LocalityProfile:
    """All restriction types for kappa in [2, m-1] and the localities among them.

    Args:
        q: Field order
        m: Ambient dimension, at least 3
        s: Deleted Simplex dimension
        with_chains: Also compute every symbol's hierarchy chain

    Raises:
        InvalidArgs: If m < 3
    """
    if m < 3:
        raise InvalidArgs(f"locality_profile needs m >= 3 (got {m})")
    spec = PuncturedSimplexSpec(q, m, s)
    types = {
        kappa: tuple(
            RestrictionType(kappa, i, q) for i in restriction_type_range(m, s, kappa)
        )
        for kappa in range(m - 1, 1, -1)
    }
    localities = tuple(
        Locality(t) for kappa in types for t in types[kappa] if t.distance >= 2
    )
    chains = all_chains(punctured_simplex(q, m, s), spec) if with_chains else {}
    profile = LocalityProfile(
        spec, types, localities, hierarchy_parameters(spec), chains
    )
    logger.debug(
        f"{spec.label}: {len(localities)} localities, hierarchy {profile.hierarchy}"
    )
    return profile
