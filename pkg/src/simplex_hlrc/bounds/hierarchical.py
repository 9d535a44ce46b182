"""Hierarchical locality parameters and the bounds built on them."""

import logging
from collections.abc import Iterable
from dataclasses import dataclass

from simplex_hlrc.bounds.classical import BoundValue, k_opt
from simplex_hlrc.errors import InvalidArgs, LocalityParseError
from simplex_hlrc.utils.formatting import format_locality_pair

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HierLocalityParams:
    """Levels [(r_1, delta_1), ..., (r_h, delta_h)], outermost first.

    r_j bounds the dimension of a level-j set and delta_j the distance of its
    restriction. Deeper levels have r_{j+1} <= r_j and delta_{j+1} < delta_j.
    """

    levels: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.levels:
            raise InvalidArgs("a hierarchy needs at least one level")
        for j, (r, delta) in enumerate(self.levels, start=1):
            if r < 1 or delta < 1:
                raise InvalidArgs(f"level {j}: r and delta must be positive")
        for j in range(1, len(self.levels)):
            (r_out, d_out), (r_in, d_in) = self.levels[j - 1], self.levels[j]
            if d_in >= d_out:
                raise InvalidArgs(
                    f"level {j + 1}: delta={d_in} must be below delta={d_out} "
                    f"of level {j}"
                )
            if r_in > r_out:
                raise InvalidArgs(
                    f"level {j + 1}: r={r_in} exceeds r={r_out} of level {j}"
                )

    @classmethod
    def of(cls, levels: Iterable[tuple[int, int]]) -> "HierLocalityParams":
        return cls(tuple((int(r), int(d)) for r, d in levels))

    @property
    def height(self) -> int:
        return len(self.levels)

    @property
    def ranks(self) -> tuple[int, ...]:
        return tuple(r for r, _ in self.levels)

    @property
    def deltas(self) -> tuple[int, ...]:
        return tuple(d for _, d in self.levels)

    def __str__(self) -> str:
        pairs = ",".join(format_locality_pair(r, d) for r, d in self.levels)
        return f"[{pairs}]"


def parse_locality(text: str) -> HierLocalityParams | None:
    """Parse ``"r1,d1;r2,d2;..."``; an empty string means no locality.

    Raises:
        LocalityParseError: With the offset of the malformed level
    """
    if not text.strip():
        return None
    levels = []
    starts = []
    offset = 0
    for chunk in text.split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise LocalityParseError(f"expected 'r,delta' but found {chunk!r}", offset)
        values = []
        cursor = offset
        for part in parts:
            token = part.strip()
            if not (token.isascii() and token.isdecimal()):
                raise LocalityParseError(
                    f"expected an integer, found {token!r}", cursor
                )
            values.append(int(token))
            cursor += len(part) + 1
        levels.append((values[0], values[1]))
        starts.append(offset)
        offset += len(chunk) + 1
    for depth in range(1, len(levels) + 1):
        try:
            HierLocalityParams.of(levels[:depth])
        except InvalidArgs as e:
            raise LocalityParseError(str(e), starts[depth - 1]) from e
    return HierLocalityParams.of(levels)


def lemma_size_bound(params: HierLocalityParams, lam: int) -> int:
    """nu(lambda) = lambda + floor(lambda/r_h)(delta_h - 1)
    + sum_{l<h} floor(lambda/r_l)(delta_l - delta_{l+1})."""
    ranks, deltas = params.ranks, params.deltas
    h = params.height
    total = lam + (lam // ranks[-1]) * (deltas[-1] - 1)
    for level in range(h - 1):
        total += (lam // ranks[level]) * (deltas[level] - deltas[level + 1])
    return total


def singleton_hlrc(n: int, k: int, params: HierLocalityParams) -> int:
    """Singleton-type upper bound on d for an H-LRC.

    d <= n - k + 1 - floor((k-1)/r_h)(delta_h - 1)
         - sum_{l<h} floor((k-1)/r_l)(delta_l - delta_{l+1})

    With a single level this is the (r, delta) bound with dimension locality.
    """
    if k < 1 or n < k:
        raise InvalidArgs(f"singleton_hlrc needs 1 <= k <= n (got n={n}, k={k})")
    return n - lemma_size_bound(params, k - 1)


def cm_hlrc_bound(q: int, n: int, d: int, params: HierLocalityParams) -> BoundValue:
    """Alphabet-dependent dimension bound min over lambda of lambda + k_opt(n - nu, d).

    The sweep covers lambda in [0, n]; ties go to the smallest lambda.
    """
    if n < 1 or d < 1:
        raise InvalidArgs(f"cm_hlrc_bound needs n >= 1 and d >= 1 (got {n}, {d})")
    terms = []
    for lam in range(n + 1):
        remaining = n - lemma_size_bound(params, lam)
        terms.append(lam + (k_opt(q, remaining, d) if remaining >= 0 else 0))
    logger.debug(f"cm_hlrc sweep q={q} n={n} d={d} {params}: {terms}")
    return BoundValue.from_terms(terms)
