"""Simplex codes and the punctured family S_q(m) - S_q(s)."""

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from simplex_hlrc.algebra.codes import CoordSet, LinearCode
from simplex_hlrc.algebra.gf import SUPPORTED_ORDERS, make_field
from simplex_hlrc.errors import InvalidArgs, UnsupportedOrder

logger = logging.getLogger(__name__)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n.

    Raises:
        InvalidArgs: Unless 0 <= k <= n and q >= 2
    """
    if not 0 <= k <= n or q < 2:
        raise InvalidArgs(
            f"gaussian_binomial needs 0 <= k <= n and q >= 2 (got {n}, {k}, {q})"
        )
    numerator, denominator = 1, 1
    for i in range(k):
        numerator *= q ** (n - i) - 1
        denominator *= q ** (i + 1) - 1
    return numerator // denominator


@dataclass(frozen=True)
class PuncturedSimplexSpec:
    """Parameters (q, m, s) of S_q(m) - S_q(s)."""

    q: int
    m: int
    s: int

    def __post_init__(self) -> None:
        if self.q not in SUPPORTED_ORDERS:
            raise UnsupportedOrder(
                f"GF({self.q}) is not supported; choose one of {SUPPORTED_ORDERS}"
            )
        if self.m < 2:
            raise InvalidArgs(f"m must be at least 2 (got {self.m})")
        if not 0 <= self.s <= self.m - 1:
            raise InvalidArgs(
                f"s must satisfy 0 <= s <= m-1 = {self.m - 1} (got {self.s})"
            )

    @property
    def length(self) -> int:
        return (self.q**self.m - self.q**self.s) // (self.q - 1)

    @property
    def dimension(self) -> int:
        return self.m

    @property
    def distance(self) -> int:
        if self.s == 0:
            return self.q ** (self.m - 1)
        return self.q ** (self.m - 1) - self.q ** (self.s - 1)

    @property
    def params(self) -> tuple[int, int, int]:
        return self.length, self.dimension, self.distance

    @property
    def deleted_count(self) -> int:
        return (self.q**self.s - 1) // (self.q - 1)

    @property
    def is_reed_muller(self) -> bool:
        """First-order Reed-Muller type RM(1, m-1): binary with s = m-1."""
        return self.q == 2 and self.s == self.m - 1

    @property
    def label(self) -> str:
        if self.s == 0:
            return f"S_{self.q}({self.m})"
        return f"S_{self.q}({self.m})-S_{self.q}({self.s})"

    def from_simplex_index(self, e: int) -> int | None:
        """Coordinate of the punctured code for S_q(m) position e (None if deleted)."""
        shifted = e - self.deleted_count
        return shifted if shifted >= 1 else None


def projective_points(q: int, m: int) -> list[tuple[int, ...]]:
    """Normalized representatives of the points of PG(m-1, q).

    Each vector's first nonzero entry is 1; vectors are ordered by their base-q
    integer value with the first entry most significant.
    """
    points = []
    for value in range(1, q**m):
        digits = tuple((value // q ** (m - 1 - i)) % q for i in range(m))
        leading = next(d for d in digits if d)
        if leading == 1:
            points.append(digits)
    return points


@lru_cache(maxsize=None)
def simplex(q: int, m: int) -> LinearCode:
    """The [(q^m-1)/(q-1), m, q^(m-1)] Simplex code in canonical column order.

    Raises:
        UnsupportedOrder: If q is not supported
        InvalidArgs: If m < 1
    """
    if m < 1:
        raise InvalidArgs(f"m must be at least 1 (got {m})")
    field = make_field(q)
    columns = np.array(projective_points(q, m), dtype=np.uint8).T
    return LinearCode(field, columns)


@lru_cache(maxsize=None)
def punctured_simplex(q: int, m: int, s: int) -> LinearCode:
    """S_q(m) - S_q(s): drop the columns whose top m-s entries are all zero.

    Those columns form the embedded S_q(s) and, in canonical order, are exactly
    the first (q^s-1)/(q-1) columns of S_q(m).
    """
    spec = PuncturedSimplexSpec(q, m, s)
    full = simplex(q, m)
    if s == 0:
        return full
    kept = full.generator[:, spec.deleted_count :]
    assert kept[: m - s].any(axis=0).all()
    logger.debug(f"Built {spec.label} with parameters {spec.params}")
    return LinearCode(full.field, kept)


def deleted_set(q: int, m: int, s: int) -> CoordSet:
    """Positions (in S_q(m)) of the columns removed by the construction."""
    spec = PuncturedSimplexSpec(q, m, s)
    return frozenset(range(1, spec.deleted_count + 1))
