"""Greedy construction of a low-entropy, large coordinate set I_c.

Given the level-j repair sets of an H-LRC, the construction adds whole level-h
sets nested inside level-(h-1) sets and so on, tracking for every added set its
incremental entropy a_i and a lower bound s_i on the incremental size. The
result satisfies H(I_c) <= lambda and |I_c| >= nu(lambda), the size that the
alphabet-dependent H-LRC bound charges for lambda.
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from simplex_hlrc.algebra.codes import CoordSet, LinearCode, min_distance, sort_key
from simplex_hlrc.algebra.matroid import Matroid
from simplex_hlrc.bounds.hierarchical import HierLocalityParams, lemma_size_bound
from simplex_hlrc.errors import InfeasiblePadding, InvalidArgs, InvalidFamilies

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SetFamilies:
    """Level-j repair sets for j = 1..h, in the order the construction tries them."""

    params: HierLocalityParams
    levels: tuple[tuple[CoordSet, ...], ...]

    def __post_init__(self) -> None:
        if len(self.levels) != self.params.height:
            raise InvalidFamilies(
                f"{len(self.levels)} families given for {self.params.height} levels"
            )

    def level(self, j: int) -> tuple[CoordSet, ...]:
        """Family of level ``j`` (1-based)."""
        return self.levels[j - 1]


def _check_coverage(code: LinearCode, j: int, family: Sequence[CoordSet]) -> None:
    covered = frozenset().union(*family) if family else frozenset()
    missing = code.coordinates - covered
    if missing:
        raise InvalidFamilies(
            f"level {j}: symbols {sort_key(missing)} lie in no repair set"
        )


def families_from_sets(
    code: LinearCode,
    params: HierLocalityParams,
    levels: Sequence[Iterable[Iterable[int]]],
) -> SetFamilies:
    """Validate explicit repair sets and wrap them as SetFamilies.

    Args:
        code: Code the sets index into
        params: Levels [(r_j, delta_j)]
        levels: One family per level, outermost first; order is preserved

    Raises:
        InvalidFamilies: A set exceeds r_j, falls short of delta_j, or a level
            leaves some symbol uncovered
    """
    if len(levels) != params.height:
        raise InvalidFamilies(
            f"{len(levels)} families given for {params.height} levels"
        )
    families = []
    for j, family in enumerate(levels, start=1):
        r, delta = params.levels[j - 1]
        members = [frozenset(s) for s in family]
        for candidate in members:
            if not candidate or not candidate <= code.coordinates:
                raise InvalidFamilies(
                    f"level {j}: {sort_key(candidate)} is not a subset of [1, {code.n}]"
                )
            entropy = code.entropy(candidate)
            if entropy > r:
                raise InvalidFamilies(
                    f"level {j}: H{sort_key(candidate)} = {entropy} exceeds r={r}"
                )
            distance = min_distance(code.restrict(candidate))
            if distance < delta:
                raise InvalidFamilies(
                    f"level {j}: distance {distance} of {sort_key(candidate)} "
                    f"is below delta={delta}"
                )
        _check_coverage(code, j, members)
        families.append(tuple(members))
    return SetFamilies(params, tuple(families))


def default_families(code: LinearCode, params: HierLocalityParams) -> SetFamilies:
    """All closed sets F with H(F) <= r_j and d(C|F) >= delta_j, per level.

    Each family is ordered lexicographically by sorted member list.

    Raises:
        InvalidFamilies: If some level does not cover every symbol
        MaterializationCapExceeded: If the flats of rank <= r_1 are too many
    """
    lattice = Matroid(code).flats(max_rank=params.ranks[0], verify=False)
    distances = {
        flat: min_distance(code.restrict(flat))
        for flat in lattice.flats
        if lattice.rank_of(flat) >= 1
    }
    families = []
    for j, (r, delta) in enumerate(params.levels, start=1):
        family = sorted(
            (
                flat
                for flat, distance in distances.items()
                if lattice.rank_of(flat) <= r and distance >= delta
            ),
            key=sort_key,
        )
        _check_coverage(code, j, family)
        families.append(tuple(family))
    logger.debug(
        f"default families for {params}: sizes {[len(f) for f in families]}"
    )
    return SetFamilies(params, tuple(families))


@dataclass(frozen=True)
class IcResult:
    """Outcome of the construction.

    ``steps`` holds (a_i, s_i) per added level-h set: the entropy gained and the
    size lower bound after all level corrections. ``padding`` lists the single
    coordinates added at the end to lift the entropy to lambda.
    """

    ic: CoordSet
    lam: int
    entropy: int
    counters: tuple[int, ...]
    steps: tuple[tuple[int, int], ...]
    padding: tuple[int, ...]
    mode: str

    @property
    def entropy_used(self) -> int:
        return self.lam

    @property
    def size(self) -> int:
        return len(self.ic)


class _Construction:
    def __init__(self, code: LinearCode, families: SetFamilies, lam: int):
        self.code = code
        self.families = families
        self.params = families.params
        self.lam = lam
        self.current: CoordSet = frozenset()
        self.counters = [0] * self.params.height
        self.steps: list[list[int]] = []

    def delta(self, level: int) -> int:
        return self.params.levels[level - 1][1]

    def entropy(self, members: Iterable[int]) -> int:
        return self.code.entropy(members)

    def _next_top(self, j: int) -> CoordSet | None:
        for candidate in self.families.level(j):
            if not candidate <= self.current:
                if self.entropy(self.current | candidate) <= self.lam:
                    return candidate
        return None

    def _inside(self, level: int, outer: CoordSet) -> CoordSet | None:
        for candidate in self.families.level(level):
            if candidate <= outer and not candidate <= self.current:
                return candidate
        return None

    def _add(self, members: CoordSet) -> None:
        before = self.entropy(self.current)
        gain = self.entropy(self.current | members) - before
        self.counters[-1] += 1
        self.steps.append([gain, gain + self.delta(self.params.height) - 1])
        self.current = self.code.closure(self.current | members)

    def _fill(self, j: int, top: CoordSet) -> None:
        h = self.params.height
        # chosen[l] is M_l; chosen[j - 1] is the top set itself
        chosen: dict[int, CoordSet] = {j - 1: top, j: top}
        level = j
        while not top <= self.current:
            inner = self._inside(level, chosen[level - 1])
            if inner is not None:
                chosen[level] = inner
                if level == h:
                    self._add(inner)
                else:
                    level += 1
                continue
            if not chosen[level - 1] <= self.current:
                raise InvalidFamilies(
                    f"level {level}: symbols of {sort_key(chosen[level - 1])} have "
                    f"no level-{level} set inside it"
                )
            level -= 1
            self.counters[level - 1] += 1
            self.steps[-1][1] += self.delta(level) - self.delta(level + 1)
        for upper in range(j, h):
            self.counters[upper - 1] += 1
        self.steps[-1][1] += self.delta(j) - self.delta(h)

    def run(self) -> None:
        for j in range(1, self.params.height + 1):
            while (top := self._next_top(j)) is not None:
                self._fill(j, top)

    def pad(self) -> list[int]:
        shortfall = self.lam - self.entropy(self.current)
        padding: list[int] = []
        if shortfall <= 0:
            return padding
        for e in range(1, self.code.n + 1):
            if e in self.current:
                continue
            if e not in self.code.closure(self.current | set(padding)):
                padding.append(e)
                if len(padding) == shortfall:
                    return padding
        raise InfeasiblePadding(
            f"cannot raise the entropy of I by {shortfall}: only {len(padding)} "
            f"independent symbols remain"
        )


def construct_ic(code: LinearCode, families: SetFamilies, lam: int) -> IcResult:
    """Build I_c for entropy budget ``lam`` from nested repair-set families.

    Level-j sets are tried from the outermost level inward; inside each chosen
    set the construction descends to level-h sets and adds them until the set is
    exhausted, then climbs back. Whenever a level-l set is exhausted the last
    s_i absorbs delta_l - delta_{l+1}. Finally single coordinates outside the
    closure pad H(I_c) up to ``lam``.

    Args:
        code: An H-LRC with locality ``families.params``
        families: Level-j repair sets
        lam: Entropy budget, 0 <= lam <= k

    Returns:
        IcResult with H(I_c) = lam and |I_c| >= nu(lam)

    Raises:
        InvalidArgs: If lam is outside [0, k]
        InvalidFamilies: If a set's symbols cannot be reached by deeper sets
        InfeasiblePadding: If the closing padding step fails
    """
    if not 0 <= lam <= code.k:
        raise InvalidArgs(f"lambda must lie in [0, {code.k}] (got {lam})")
    run = _Construction(code, families, lam)
    run.run()
    padding = run.pad()
    ic = run.current | frozenset(padding)
    mode = "algorithm-1" if families.params.height == 2 else "algorithm-2"
    result = IcResult(
        ic=ic,
        lam=lam,
        entropy=code.entropy(ic),
        counters=tuple(run.counters),
        steps=tuple((a, s) for a, s in run.steps),
        padding=tuple(padding),
        mode=mode,
    )
    logger.debug(
        f"I_c for lambda={lam}: size {result.size}, counters {result.counters}, "
        f"nu={lemma_size_bound(families.params, lam)}"
    )
    return result


construct_Ic = construct_ic  # noqa: N816
