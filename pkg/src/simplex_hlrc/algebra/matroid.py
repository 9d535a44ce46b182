"""The matroid of a code: rank, closure, flats, hyperplanes and covers."""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from simplex_hlrc.algebra.codes import (
    CoordSet,
    LinearCode,
    coord_set,
    iter_codewords,
    sort_key,
)
from simplex_hlrc.config import (
    ENUMERATION_CAP,
    FLAT_MAX_LENGTH,
    FLAT_MAX_RANK,
    LATTICE_PAIR_CHECK_LIMIT,
)
from simplex_hlrc.errors import InvalidArgs, MaterializationCapExceeded

logger = logging.getLogger(__name__)


def _flat_order(flat: CoordSet, rank: int) -> tuple[int, tuple[int, ...]]:
    return rank, sort_key(flat)


class Matroid:
    """Matroid on a ground set of code coordinates, ranked by the code's entropy.

    Deletion and restriction only shrink the ground set; rank queries always go
    to the underlying code, which is what makes M\\Y the matroid of the
    punctured code.
    """

    def __init__(self, code: LinearCode, ground: Iterable[int] | None = None):
        self.code = code
        self.ground: CoordSet = (
            code.coordinates if ground is None else coord_set(ground)
        )
        if not self.ground <= code.coordinates:
            raise InvalidArgs("ground set must be a subset of the code coordinates")

    def __repr__(self) -> str:
        return f"<Matroid |E|={len(self.ground)} rank={self.full_rank}>"

    @property
    def full_rank(self) -> int:
        return self.rank(self.ground)

    def _within(self, members: Iterable[int]) -> CoordSet:
        subset = coord_set(members)
        if not subset <= self.ground:
            raise InvalidArgs(f"{sorted(subset - self.ground)} not in the ground set")
        return subset

    def rank(self, members: Iterable[int]) -> int:
        return self.code.entropy(self._within(members))

    def closure(self, members: Iterable[int]) -> CoordSet:
        return self.code.closure(self._within(members)) & self.ground

    def is_flat(self, members: Iterable[int]) -> bool:
        subset = coord_set(members)
        return self.closure(subset) == subset

    def delete(self, removed: Iterable[int]) -> "Matroid":
        """M\\Y on the ground set E - Y."""
        return Matroid(self.code, self.ground - self._within(removed))

    def restrict(self, kept: Iterable[int]) -> "Matroid":
        """M|Y on the ground set Y."""
        return Matroid(self.code, self._within(kept))

    def flats(
        self, *, max_rank: int | None = None, verify: bool = True
    ) -> "FlatLattice":
        """Materialize every flat, bottom-up by closing (flat + e).

        Args:
            max_rank: Stop after flats of this rank
            verify: Run the lattice checks on the result

        Returns:
            FlatLattice ordered by (rank, sorted members)

        Raises:
            MaterializationCapExceeded: Ground set above 64 elements or the
                requested rank above 7
        """
        top = self.full_rank if max_rank is None else min(max_rank, self.full_rank)
        if len(self.ground) > FLAT_MAX_LENGTH or top > FLAT_MAX_RANK:
            raise MaterializationCapExceeded(
                f"flat lattice of |E|={len(self.ground)}, rank {top} exceeds caps "
                f"(|E| <= {FLAT_MAX_LENGTH}, rank <= {FLAT_MAX_RANK})"
            )
        bottom = self.closure(frozenset())
        ranks: dict[CoordSet, int] = {bottom: 0}
        covers: list[tuple[CoordSet, CoordSet]] = []
        frontier = [bottom]
        for level in range(top):
            upper: list[CoordSet] = []
            for flat in frontier:
                absorbed: set[int] = set(flat)
                for e in sorted(self.ground - flat):
                    if e in absorbed:
                        continue
                    cover = self.closure(flat | {e})
                    absorbed |= cover
                    covers.append((flat, cover))
                    if cover not in ranks:
                        ranks[cover] = level + 1
                        upper.append(cover)
            frontier = upper
        logger.debug(f"Materialized {len(ranks)} flats up to rank {top}")
        lattice = FlatLattice.build(self, ranks, covers)
        if verify:
            lattice.verify()
        return lattice

    def hyperplanes(self) -> list[CoordSet]:
        top = self.full_rank - 1
        return list(self.flats(max_rank=top, verify=False).of_rank(top))


@dataclass(frozen=True)
class FlatLattice:
    """All flats of a matroid (possibly truncated at some rank) and their covers."""

    matroid: Matroid
    flats: tuple[CoordSet, ...]
    ranks: dict[CoordSet, int] = field(repr=False)
    covers: frozenset[tuple[CoordSet, CoordSet]] = field(repr=False)

    @classmethod
    def build(
        cls,
        matroid: Matroid,
        ranks: dict[CoordSet, int],
        covers: Iterable[tuple[CoordSet, CoordSet]],
    ) -> "FlatLattice":
        ordered = tuple(sorted(ranks, key=lambda f: _flat_order(f, ranks[f])))
        return cls(matroid, ordered, dict(ranks), frozenset(covers))

    def __len__(self) -> int:
        return len(self.flats)

    def __contains__(self, members: object) -> bool:
        return members in self.ranks

    def rank_of(self, flat: CoordSet) -> int:
        return self.ranks[flat]

    @property
    def top_rank(self) -> int:
        return max(self.ranks.values())

    def of_rank(self, rank: int) -> tuple[CoordSet, ...]:
        return tuple(f for f in self.flats if self.ranks[f] == rank)

    def rank_counts(self) -> list[int]:
        return [len(self.of_rank(r)) for r in range(self.top_rank + 1)]

    def hyperplanes(self) -> tuple[CoordSet, ...]:
        return self.of_rank(self.matroid.full_rank - 1)

    def meet(self, f1: CoordSet, f2: CoordSet) -> CoordSet:
        return f1 & f2

    def join(self, f1: CoordSet, f2: CoordSet) -> CoordSet:
        return self.matroid.closure(f1 | f2)

    def is_cover(self, lower: CoordSet, upper: CoordSet) -> bool:
        """lower covers-below upper: lower < upper with no flat strictly between."""
        return (lower, upper) in self.covers

    def verify(self) -> None:
        """Check closedness, cover ranks, hyperplane intersections and meets.

        The pairwise meet check only runs up to LATTICE_PAIR_CHECK_LIMIT flats.

        Raises:
            InvalidArgs: If the materialized lattice is inconsistent
        """
        matroid = self.matroid
        for flat in self.flats:
            if matroid.closure(flat) != flat:
                raise InvalidArgs(f"{sort_key(flat)} is not closed")
        for lower, upper in self.covers:
            if not lower < upper or self.ranks[upper] != self.ranks[lower] + 1:
                raise InvalidArgs(f"bad cover {sort_key(lower)} -> {sort_key(upper)}")
        if self.top_rank == matroid.full_rank and matroid.full_rank > 0:
            hyperplanes = self.hyperplanes()
            for flat in self.flats:
                meet = frozenset(matroid.ground)
                for hyperplane in hyperplanes:
                    if flat <= hyperplane:
                        meet &= hyperplane
                if meet != flat:
                    raise InvalidArgs(
                        f"{sort_key(flat)} is not an intersection of hyperplanes"
                    )
        if len(self.flats) <= LATTICE_PAIR_CHECK_LIMIT:
            for f1, f2 in combinations(self.flats, 2):
                if (f1 & f2) not in self.ranks:
                    raise InvalidArgs("flats are not closed under intersection")

    def restriction_flats(self, kept: Iterable[int]) -> list[CoordSet]:
        """F(M|Y) = {F & Y : F in F(M)}, deduplicated and ordered."""
        subset = coord_set(kept)
        if not subset <= self.matroid.ground:
            raise InvalidArgs("Y must be a subset of the ground set")
        meets = {flat & subset for flat in self.flats}
        return sorted(meets, key=lambda f: (self.matroid.rank(f), sort_key(f)))

    def coatom_property(self, flat: CoordSet) -> bool:
        """For every hyperplane H: either Y <= H or (H & Y) is covered by Y."""
        for hyperplane in self.hyperplanes():
            if flat <= hyperplane:
                continue
            if not self.is_cover(hyperplane & flat, flat):
                return False
        return True

    def is_modular(self) -> bool:
        """rank(F1) + rank(F2) = rank(F1 v F2) + rank(F1 ^ F2) for all pairs."""
        for f1, f2 in combinations(self.flats, 2):
            joined = self.join(f1, f2)
            met = self.meet(f1, f2)
            if self.ranks[f1] + self.ranks[f2] != (
                self.matroid.rank(joined) + self.matroid.rank(met)
            ):
                return False
        return True


def matroid_from_code(code: LinearCode) -> Matroid:
    return Matroid(code)


def flats(matroid: Matroid) -> FlatLattice:
    return matroid.flats()


def delete(matroid: Matroid, removed: Iterable[int]) -> Matroid:
    return matroid.delete(removed)


def restriction_flats(matroid: Matroid, kept: Iterable[int]) -> list[CoordSet]:
    return matroid.flats().restriction_flats(kept)


def minimal_supports(
    code: LinearCode, *, cap: int = ENUMERATION_CAP
) -> list[CoordSet]:
    """Inclusion-minimal supports of the nonzero codewords."""
    masks: set[int] = set()
    weights = 1 << np.arange(code.n, dtype=object)
    for block in iter_codewords(code, cap=cap):
        for row in np.unique(block != 0, axis=0):
            if row.any():
                masks.add(int(weights[row].sum()))
    minimal: list[int] = []
    for mask in sorted(masks, key=lambda m: (bin(m).count("1"), m)):
        if not any(kept & mask == kept for kept in minimal):
            minimal.append(mask)
    return [
        frozenset(i + 1 for i in range(code.n) if mask >> i & 1) for mask in minimal
    ]


def hyperplanes_via_supports(
    code: LinearCode, *, cap: int = ENUMERATION_CAP
) -> list[CoordSet]:
    """Hyperplanes as complements of the minimal nonzero codeword supports.

    Returns:
        Hyperplanes ordered by sorted member list

    Raises:
        EnumerationCapExceeded: If q^k exceeds ``cap``
    """
    everything = code.coordinates
    found = [everything - support for support in minimal_supports(code, cap=cap)]
    return sorted(found, key=sort_key)
