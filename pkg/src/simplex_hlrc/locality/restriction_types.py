"""Restriction types S(kappa) - S(i) and their admissible ranges."""

from dataclasses import dataclass

from simplex_hlrc.algebra.codes import WeightEnumerator
from simplex_hlrc.errors import InvalidArgs
from simplex_hlrc.locality.enumerator import weight_enumerator_formula


@dataclass(frozen=True, order=True)
class RestrictionType:
    """The code S_q(kappa) - S_q(i) a closed set of dimension kappa restricts to."""

    kappa: int
    i: int
    q: int = 2

    def __post_init__(self) -> None:
        if self.kappa < 1 or not 0 <= self.i <= self.kappa - 1:
            raise InvalidArgs(
                f"restriction type needs 0 <= i <= kappa-1 (got {self.kappa}, {self.i})"
            )

    @property
    def length(self) -> int:
        return (self.q**self.kappa - self.q**self.i) // (self.q - 1)

    @property
    def dimension(self) -> int:
        return self.kappa

    @property
    def distance(self) -> int:
        if self.i == 0:
            return self.q ** (self.kappa - 1)
        return self.q ** (self.kappa - 1) - self.q ** (self.i - 1)

    @property
    def params(self) -> tuple[int, int, int]:
        return self.length, self.dimension, self.distance

    @property
    def enumerator(self) -> WeightEnumerator:
        if self.kappa == 1:
            return WeightEnumerator.from_counts({0: 1, 1: self.q - 1})
        return weight_enumerator_formula(self.q, self.kappa, self.i)

    @property
    def signature(self) -> tuple[int, int, int, WeightEnumerator]:
        return self.length, self.dimension, self.distance, self.enumerator

    @property
    def label(self) -> str:
        if self.i == 0:
            return f"S({self.kappa})"
        return f"S({self.kappa})-S({self.i})"

    def __str__(self) -> str:
        n, k, d = self.params
        return f"{self.label} [{n},{k},{d}]"


def restriction_type_range(m: int, s: int, kappa: int) -> list[int]:
    """Admissible i with max(0, s-m+kappa) <= i <= min(s, kappa-1).

    Raises:
        InvalidArgs: Unless m >= 3, 2 <= kappa <= m-1 and 0 <= s <= m-1
    """
    if m < 3 or not 2 <= kappa <= m - 1 or not 0 <= s <= m - 1:
        raise InvalidArgs(
            f"restriction_type_range needs m >= 3, 2 <= kappa <= m-1, "
            f"0 <= s <= m-1 (got m={m}, s={s}, kappa={kappa})"
        )
    return list(range(max(0, s - m + kappa), min(s, kappa - 1) + 1))


def chain_type(q: int, m: int, s: int, kappa: int) -> RestrictionType:
    """Type of the level-kappa set in the hierarchy chain."""
    return RestrictionType(kappa, max(0, s - m + kappa), q)
