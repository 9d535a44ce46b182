"""Check that given repair-set chains make a code a hierarchical LRC."""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from simplex_hlrc.algebra.codes import CoordSet, LinearCode, min_distance, sort_key
from simplex_hlrc.algebra.matroid import Matroid
from simplex_hlrc.bounds.hierarchical import HierLocalityParams
from simplex_hlrc.locality.local_sets import ChainLink

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HlrcVerdict:
    ok: bool
    witness: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def chain_sets(links: Sequence[ChainLink]) -> list[CoordSet]:
    """Chain members outermost first, the order verify_hlrc expects."""
    return [link.members for link in sorted(links, key=lambda x: -x.kappa)]


class _Checker:
    def __init__(
        self,
        code: LinearCode,
        params: HierLocalityParams,
        pool: list[set[CoordSet]],
    ):
        self.code = code
        self.params = params
        self.pool = pool
        self._supported: dict[tuple[CoordSet, int], bool] = {}
        self._distance: dict[CoordSet, int] = {}

    def distance(self, members: CoordSet) -> int:
        if members not in self._distance:
            self._distance[members] = min_distance(self.code.restrict(members))
        return self._distance[members]

    def qualifies(self, members: CoordSet, level: int) -> bool:
        r, delta = self.params.levels[level]
        return (
            bool(members)
            and self.code.entropy(members) <= r
            and self.distance(members) >= delta
        )

    def supports(self, outer: CoordSet, level: int) -> bool:
        """Every symbol of ``outer`` has a valid level-``level`` set inside it."""
        key = (outer, level)
        if key not in self._supported:
            self._supported[key] = all(
                self._find_inner(outer, a, level) for a in sorted(outer)
            )
        return self._supported[key]

    def _valid(self, members: CoordSet, level: int) -> bool:
        if not self.qualifies(members, level):
            return False
        if level + 1 < self.params.height:
            return self.supports(members, level + 1)
        return True

    def _find_inner(self, outer: CoordSet, symbol: int, level: int) -> bool:
        for candidate in sorted(self.pool[level], key=sort_key):
            if symbol in candidate and candidate <= outer:
                if self._valid(candidate, level):
                    return True
        r, _ = self.params.levels[level]
        lattice = Matroid(self.code, outer).flats(max_rank=r, verify=False)
        for flat in lattice.flats:
            if symbol in flat and self._valid(flat, level):
                self.pool[level].add(flat)
                return True
        return False


def verify_hlrc(
    code: LinearCode,
    chains: Mapping[int, Sequence[CoordSet]],
    params: HierLocalityParams,
) -> HlrcVerdict:
    """Whether per-symbol chains realize the hierarchical locality ``params``.

    For every symbol e and level j the set L_j must contain e, have entropy at
    most r_j and restricted distance at least delta_j, and sit inside L_{j-1}.
    Recursively, every symbol of L_j must own a level-(j+1) set inside L_j; such
    sets are looked up among the supplied chains first and then among the flats
    of C|L_j.

    Args:
        code: The code under test
        chains: symbol -> sets L_1 >= L_2 >= ... (outermost first)
        params: Levels [(r_j, delta_j)]

    Returns:
        HlrcVerdict, falsy with a witness on the first violation
    """
    height = params.height
    pool: list[set[CoordSet]] = [set() for _ in range(height)]
    for sets in chains.values():
        for level, members in enumerate(sets[:height]):
            pool[level].add(frozenset(members))
    checker = _Checker(code, params, pool)

    for symbol in range(1, code.n + 1):
        sets = [frozenset(s) for s in chains.get(symbol, ())]
        if len(sets) != height:
            return HlrcVerdict(
                False, f"symbol {symbol}: {len(sets)} sets for {height} levels"
            )
        for level, members in enumerate(sets):
            r, delta = params.levels[level]
            where = f"symbol {symbol}, level {level + 1} {sort_key(members)}"
            if symbol not in members:
                return HlrcVerdict(False, f"{where}: does not contain the symbol")
            if level and not members <= sets[level - 1]:
                return HlrcVerdict(False, f"{where}: not inside level {level}")
            if code.entropy(members) > r:
                return HlrcVerdict(
                    False, f"{where}: entropy {code.entropy(members)} > r={r}"
                )
            distance = checker.distance(members)
            if distance < delta:
                return HlrcVerdict(
                    False, f"{where}: distance {distance} < delta={delta}"
                )
            if level + 1 < height and not checker.supports(members, level + 1):
                return HlrcVerdict(
                    False, f"{where}: some symbol lacks a level-{level + 2} set inside"
                )
    logger.debug(f"Verified hierarchy {params} on {code!r}")
    return HlrcVerdict(True)
