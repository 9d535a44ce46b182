"""Match restrictions of S_q(m) - S_q(s) to their S(kappa) - S(i) types."""

import logging
from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

from simplex_hlrc.algebra.codes import (
    CoordSet,
    LinearCode,
    WeightEnumerator,
    coord_set,
    permutation_equivalent,
    sort_key,
    weight_enumerator_bruteforce,
)
from simplex_hlrc.algebra.matroid import Matroid, hyperplanes_via_supports
from simplex_hlrc.config import EXACT_EQUIVALENCE_LIMIT
from simplex_hlrc.construction.simplex import (
    PuncturedSimplexSpec,
    deleted_set,
    gaussian_binomial,
    punctured_simplex,
    simplex,
)
from simplex_hlrc.errors import UnclassifiedHyperplane
from simplex_hlrc.locality.restriction_types import (
    RestrictionType,
    restriction_type_range,
)

logger = logging.getLogger(__name__)

Signature = tuple[int, int, int, WeightEnumerator]


@lru_cache(maxsize=65536)
def restriction_signature(code: LinearCode, members: CoordSet) -> Signature:
    """(length, dimension, distance, weight enumerator) of C restricted to a set."""
    restricted = code.restrict(members)
    enumerator = weight_enumerator_bruteforce(restricted)
    return restricted.n, restricted.k, enumerator.min_distance, enumerator


def matches_type(
    code: LinearCode,
    members: Iterable[int],
    rtype: RestrictionType,
    *,
    exact_limit: int = EXACT_EQUIVALENCE_LIMIT,
) -> bool:
    """Whether C|F is S(kappa) - S(i).

    The four-tuple signature is compared first; short sets are additionally
    checked for exact permutation equivalence with the reference code.
    """
    coords = coord_set(members)
    if restriction_signature(code, coords) != rtype.signature:
        return False
    if len(coords) <= exact_limit and rtype.kappa >= 2:
        reference = punctured_simplex(rtype.q, rtype.kappa, rtype.i)
        return permutation_equivalent(code.restrict(coords), reference)
    return True


def match_type(
    code: LinearCode, members: Iterable[int], candidates: Iterable[RestrictionType]
) -> RestrictionType | None:
    coords = coord_set(members)
    hits = [t for t in candidates if matches_type(code, coords, t)]
    if len(hits) > 1:
        logger.warning(f"{sort_key(coords)} matches several types: {hits}")
    return hits[0] if hits else None


@dataclass(frozen=True)
class HyperplaneClass:
    """Hyperplanes of one restriction type."""

    rtype: RestrictionType
    hyperplanes: tuple[CoordSet, ...]

    @property
    def count(self) -> int:
        return len(self.hyperplanes)


def classify_hyperplanes(
    q: int, m: int, s: int
) -> dict[RestrictionType, HyperplaneClass]:
    """Split the hyperplanes of S_q(m) - S_q(s) into their two possible types.

    Returns:
        Mapping from restriction type to its hyperplanes, types in ascending i

    Raises:
        UnclassifiedHyperplane: A hyperplane fits neither type, or the count of
            type S(m-1) - S(s) differs from [m-s, m-s-1]_q
    """
    spec = PuncturedSimplexSpec(q, m, s)
    code = punctured_simplex(q, m, s)
    candidates = [
        RestrictionType(m - 1, i, q) for i in restriction_type_range(m, s, m - 1)
    ]
    buckets: dict[RestrictionType, list[CoordSet]] = {t: [] for t in candidates}
    for hyperplane in hyperplanes_via_supports(code):
        rtype = match_type(code, hyperplane, candidates)
        if rtype is None:
            raise UnclassifiedHyperplane(
                f"{spec.label}: hyperplane {sort_key(hyperplane)} with signature "
                f"{restriction_signature(code, hyperplane)[:3]} has no admissible type"
            )
        buckets[rtype].append(hyperplane)

    expected = gaussian_binomial(m - s, m - s - 1, q) if s <= m - 2 else 0
    containing = sum(
        len(found) for t, found in buckets.items() if t.i == s
    )
    if containing != expected:
        raise UnclassifiedHyperplane(
            f"{spec.label}: {containing} hyperplanes of type S({m - 1})-S({s}), "
            f"expected {expected}"
        )
    logger.debug(
        f"{spec.label}: "
        + ", ".join(f"{t.label} x{len(found)}" for t, found in buckets.items())
    )
    return {t: HyperplaneClass(t, tuple(found)) for t, found in buckets.items()}


@dataclass(frozen=True)
class HyperplaneCorrespondence:
    """The map H -> H - Y from hyperplanes of M(S) (H != Y) to hyperplanes of M(C)."""

    images: dict[CoordSet, CoordSet]
    targets: frozenset[CoordSet]

    @property
    def injective(self) -> bool:
        return len(set(self.images.values())) == len(self.images)

    @property
    def surjective(self) -> bool:
        return set(self.images.values()) == set(self.targets)

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective


def hyperplane_correspondence(q: int, m: int, s: int) -> HyperplaneCorrespondence:
    """Enumerate both sides of the hyperplane map of Simplex deletion.

    Images are expressed in the coordinates of S_q(m) - S_q(s).
    """
    spec = PuncturedSimplexSpec(q, m, s)
    full = Matroid(simplex(q, m))
    removed = deleted_set(q, m, s)
    punctured = full.delete(removed)

    def relabel(members: CoordSet) -> CoordSet:
        return frozenset(spec.from_simplex_index(e) for e in members)

    images = {
        hyperplane: relabel(hyperplane - removed)
        for hyperplane in hyperplanes_via_supports(simplex(q, m))
        if hyperplane != removed
    }
    targets = frozenset(relabel(h) for h in punctured.hyperplanes())
    return HyperplaneCorrespondence(images, targets)


def classify_flats(q: int, m: int, s: int) -> dict[CoordSet, RestrictionType]:
    """Type every closed set of dimension 2..m-1 (exhaustive completeness check).

    Raises:
        UnclassifiedHyperplane: If some flat matches no admissible type, or
            more than one
    """
    spec = PuncturedSimplexSpec(q, m, s)
    code = punctured_simplex(q, m, s)
    lattice = Matroid(code).flats(max_rank=m - 1, verify=False)
    typed: dict[CoordSet, RestrictionType] = {}
    for kappa in range(2, m):
        candidates = [
            RestrictionType(kappa, i, q) for i in restriction_type_range(m, s, kappa)
        ]
        for flat in lattice.of_rank(kappa):
            hits = [
                t
                for t in candidates
                if restriction_signature(code, flat) == t.signature
            ]
            if len(hits) != 1:
                raise UnclassifiedHyperplane(
                    f"{spec.label}: closed set {sort_key(flat)} "
                    f"matches {len(hits)} types"
                )
            typed[flat] = hits[0]
    return typed
