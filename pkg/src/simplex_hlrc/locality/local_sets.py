"""Per-symbol local sets and the hierarchy chain, found by hyperplane descent.

Starting from the whole code, each step replaces the current closed set W by a
hyperplane of C|W that contains the symbol and has the next required type. The
smallest qualifying hyperplane (by sorted member list) is taken at every step.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

from simplex_hlrc.algebra.codes import CoordSet, LinearCode, sort_key
from simplex_hlrc.algebra.matroid import hyperplanes_via_supports
from simplex_hlrc.construction.simplex import PuncturedSimplexSpec
from simplex_hlrc.errors import InvalidArgs, TypeNotRealizable
from simplex_hlrc.locality.classifier import matches_type
from simplex_hlrc.locality.restriction_types import (
    RestrictionType,
    chain_type,
    restriction_type_range,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChainLink:
    """One level of a symbol's hierarchy chain."""

    members: CoordSet
    rtype: RestrictionType

    @property
    def kappa(self) -> int:
        return self.rtype.kappa

    @property
    def distance(self) -> int:
        return self.rtype.distance


@lru_cache(maxsize=4096)
def hyperplanes_within(code: LinearCode, members: CoordSet) -> tuple[CoordSet, ...]:
    """Hyperplanes of C|W as sets of original coordinates, ordered lexicographically."""
    ordered = sorted(members)
    local = hyperplanes_via_supports(code.restrict(members))
    mapped = [frozenset(ordered[e - 1] for e in hyperplane) for hyperplane in local]
    return tuple(sorted(mapped, key=sort_key))


def descent_path(
    spec: PuncturedSimplexSpec, kappa: int, i: int
) -> list[RestrictionType]:
    """Types visited from S(m-1) down to S(kappa) - S(i).

    The inner parameter is lowered at the earliest steps; once it reaches i it
    stays there. Every intermediate type is admissible.
    """
    q, m, s = spec.q, spec.m, spec.s
    path = []
    current = s
    for level in range(m - 1, kappa - 1, -1):
        if current > i:
            current -= 1
        path.append(RestrictionType(level, current, q))
    return path


def _descend(
    code: LinearCode,
    spec: PuncturedSimplexSpec,
    symbol: int,
    path: list[RestrictionType],
) -> list[ChainLink]:
    current = code.coordinates
    links: list[ChainLink] = []
    for target in path:
        chosen = None
        for hyperplane in hyperplanes_within(code, current):
            if symbol in hyperplane and matches_type(code, hyperplane, target):
                chosen = hyperplane
                break
        if chosen is None:
            raise TypeNotRealizable(
                f"{spec.label}: no closed set of type {target} contains symbol "
                f"{symbol} inside {sort_key(current)}"
            )
        links.append(ChainLink(chosen, target))
        current = chosen
    return links


def _check_symbol(code: LinearCode, symbol: int) -> None:
    if not 1 <= symbol <= code.n:
        raise InvalidArgs(f"symbol {symbol} outside [1, {code.n}]")


def find_local_set(
    code: LinearCode, spec: PuncturedSimplexSpec, symbol: int, kappa: int, i: int
) -> CoordSet:
    """A closed set containing ``symbol`` whose restriction is S(kappa) - S(i).

    Args:
        code: S_q(m) - S_q(s) in canonical order
        spec: Its parameters
        symbol: Coordinate in [1, n]
        kappa: Dimension of the local set, 2 <= kappa <= m-1
        i: Inner parameter within restriction_type_range(m, s, kappa)

    Returns:
        The closed set reached by hyperplane descent

    Raises:
        InvalidArgs: Symbol or (kappa, i) outside the admissible range
        TypeNotRealizable: If the descent gets stuck
    """
    _check_symbol(code, symbol)
    if i not in restriction_type_range(spec.m, spec.s, kappa):
        raise InvalidArgs(
            f"i={i} is not admissible for kappa={kappa} in {spec.label}"
        )
    return _descend(code, spec, symbol, descent_path(spec, kappa, i))[-1].members


def chain_levels(spec: PuncturedSimplexSpec) -> list[RestrictionType]:
    """Chain types from kappa = m-1 down, dropping levels with distance below 2."""
    if spec.m < 3:
        return []
    types = [chain_type(spec.q, spec.m, spec.s, k) for k in range(spec.m - 1, 1, -1)]
    return [t for t in types if t.distance >= 2]


def hierarchy_chain(
    code: LinearCode, spec: PuncturedSimplexSpec, symbol: int
) -> list[ChainLink]:
    """Nested sets F_2 <= F_3 <= ... <= F_{m-1} around ``symbol``, innermost first.

    F_kappa has type S(kappa) - S(max(0, s-m+kappa)). For q = 2 and s = m-1 the
    chain starts at F_3.
    """
    _check_symbol(code, symbol)
    levels = chain_levels(spec)
    if not levels:
        return []
    path = [chain_type(spec.q, spec.m, spec.s, k) for k in range(spec.m - 1, 1, -1)]
    links = _descend(code, spec, symbol, path[: len(levels)])
    return list(reversed(links))


def all_chains(
    code: LinearCode, spec: PuncturedSimplexSpec
) -> dict[int, list[ChainLink]]:
    chains = {e: hierarchy_chain(code, spec, e) for e in range(1, code.n + 1)}
    logger.debug(f"{spec.label}: computed hierarchy chains for {code.n} symbols")
    return chains


def local_set_coverage(
    code: LinearCode, spec: PuncturedSimplexSpec
) -> dict[tuple[int, int], int]:
    """Run find_local_set for every symbol and admissible (kappa, i).

    Returns:
        Number of symbols served per (kappa, i); each equals n on success
    """
    served: dict[tuple[int, int], int] = {}
    for kappa in range(2, spec.m):
        for i in restriction_type_range(spec.m, spec.s, kappa):
            for symbol in range(1, code.n + 1):
                local = find_local_set(code, spec, symbol, kappa, i)
                if symbol in local and code.entropy(local) == kappa:
                    served[(kappa, i)] = served.get((kappa, i), 0) + 1
    return served
