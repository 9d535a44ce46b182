"""Closed-form weight enumerator of S_q(m) - S_q(s)."""

from simplex_hlrc.algebra.codes import WeightEnumerator
from simplex_hlrc.construction.simplex import PuncturedSimplexSpec


def weight_enumerator_formula(q: int, m: int, s: int) -> WeightEnumerator:
    """Weight distribution of S_q(m) - S_q(s) without enumerating codewords.

    For s >= 1 there are q^m - q^(m-s) codewords of weight q^(m-1) - q^(s-1)
    and q^(m-s) - 1 of weight q^(m-1). For s = 0 the code is the Simplex code,
    whose nonzero codewords all have weight q^(m-1).

    Raises:
        InvalidArgs: Unless m >= 2 and 0 <= s <= m-1
    """
    PuncturedSimplexSpec(q, m, s)
    top = q ** (m - 1)
    if s == 0:
        return WeightEnumerator.from_counts({0: 1, top: q**m - 1})
    return WeightEnumerator.from_counts(
        {
            0: 1,
            top - q ** (s - 1): q**m - q ** (m - s),
            top: q ** (m - s) - 1,
        }
    )
