"""Linear codes over GF(q): entropy, closure, restriction and shortening.

Coordinates are 1-based throughout, so a code of length n lives on ``{1..n}``.
"""

import itertools
import logging
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass

import numpy as np

from simplex_hlrc.algebra import linalg
from simplex_hlrc.algebra.gf import FiniteField
from simplex_hlrc.config import ENUMERATION_CAP, PERMUTATION_SEARCH_CAP
from simplex_hlrc.errors import (
    EmptySet,
    EnumerationCapExceeded,
    FullEntropyShorten,
    IndexOutOfRange,
    InvalidArgs,
    RankDeficient,
    SearchCapExceeded,
)

logger = logging.getLogger(__name__)

CoordSet = frozenset[int]

# Rows enumerated together in one vectorized block (q**rows codewords)
_BLOCK_CODEWORDS = 4096


def coord_set(members: Iterable[int]) -> CoordSet:
    return frozenset(int(e) for e in members)


def sort_key(members: Iterable[int]) -> tuple[int, ...]:
    """Lexicographic order on sorted member lists, used for every tie-break."""
    return tuple(sorted(members))


@dataclass(frozen=True)
class WeightEnumerator:
    """Weight distribution of a code, stored as sorted (weight, count) terms."""

    terms: tuple[tuple[int, int], ...]

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "WeightEnumerator":
        return cls(tuple(sorted((int(w), int(c)) for w, c in counts.items() if c)))

    @property
    def counts(self) -> dict[int, int]:
        return dict(self.terms)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.terms)

    @property
    def min_distance(self) -> int:
        nonzero = [w for w, _ in self.terms if w > 0]
        return min(nonzero) if nonzero else 0

    def __getitem__(self, weight: int) -> int:
        return self.counts.get(weight, 0)

    def polynomial(self) -> str:
        """Render as ``1 + 12y^6 + 3y^8``."""
        parts = []
        for weight, count in self.terms:
            if weight == 0:
                parts.append(str(count))
            else:
                coef = "" if count == 1 else str(count)
                power = "" if weight == 1 else f"^{weight}"
                parts.append(f"{coef}y{power}")
        return " + ".join(parts)


class LinearCode:
    """A linear [n, k] code given by a full-rank k x n generator matrix.

    Entropy and closure queries are memoized per coordinate set; the generator
    itself is read-only, so instances are safe to share.
    """

    def __init__(
        self,
        field: FiniteField,
        generator: np.ndarray,
        *,
        allow_zero_columns: bool = False,
    ):
        """Initialize a code.

        Args:
            field: Alphabet
            generator: k x n matrix with entries in [0, q)
            allow_zero_columns: Accept all-zero columns

        Raises:
            EntryOutOfRange: Entry not in [0, q)
            RankDeficient: Rows are linearly dependent
            InvalidArgs: Empty matrix or zero column without opt-in
        """
        matrix = field.asarray(generator)
        if matrix.ndim != 2 or matrix.shape[0] == 0 or matrix.shape[1] == 0:
            raise InvalidArgs("generator must be a nonempty 2-D matrix")
        if linalg.rank(field, matrix) != matrix.shape[0]:
            raise RankDeficient(
                f"{matrix.shape[0]} generator rows have rank "
                f"{linalg.rank(field, matrix)}; pass a basis"
            )
        if not allow_zero_columns and not np.all(matrix.any(axis=0)):
            zero = int(np.flatnonzero(~matrix.any(axis=0))[0]) + 1
            raise InvalidArgs(f"column {zero} is all-zero")
        matrix.setflags(write=False)
        self.field = field
        self.generator = matrix
        self.allow_zero_columns = allow_zero_columns
        self._entropy_cache: dict[CoordSet, int] = {}
        self._closure_cache: dict[CoordSet, CoordSet] = {}

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def k(self) -> int:
        return int(self.generator.shape[0])

    @property
    def n(self) -> int:
        return int(self.generator.shape[1])

    @property
    def coordinates(self) -> CoordSet:
        return frozenset(range(1, self.n + 1))

    def column(self, e: int) -> np.ndarray:
        self._check({e})
        return self.generator[:, e - 1]

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(int(x) for x in col) for col in self.generator.T]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LinearCode)
            and other.q == self.q
            and np.array_equal(other.generator, self.generator)
        )

    def __hash__(self) -> int:
        return hash((self.q, self.generator.shape, self.generator.tobytes()))

    def __repr__(self) -> str:
        return f"<LinearCode GF({self.q}) [{self.n},{self.k}]>"

    def _check(self, members: Iterable[int]) -> CoordSet:
        coords = coord_set(members)
        bad = [e for e in coords if not 1 <= e <= self.n]
        if bad:
            raise IndexOutOfRange(f"coordinates {sorted(bad)} outside [1, {self.n}]")
        return coords

    def _submatrix(self, coords: CoordSet) -> np.ndarray:
        return self.generator[:, [e - 1 for e in sorted(coords)]]

    def entropy(self, members: Iterable[int]) -> int:
        """H(I): dimension of the restriction to I, the rank of its columns."""
        coords = self._check(members)
        cached = self._entropy_cache.get(coords)
        if cached is None:
            cached = linalg.rank(self.field, self._submatrix(coords)) if coords else 0
            self._entropy_cache[coords] = cached
        return cached

    def closure(self, members: Iterable[int]) -> CoordSet:
        """cl(I): every coordinate whose column lies in the span of I's columns.

        Membership is tested for all columns at once against the annihilator of
        the span.
        """
        coords = self._check(members)
        cached = self._closure_cache.get(coords)
        if cached is not None:
            return cached
        if coords:
            annihilator = linalg.null_space(self.field, self._submatrix(coords).T)
        else:
            annihilator = np.eye(self.k, dtype=np.uint8)
        if annihilator.shape[0] == 0:
            closed = self.coordinates
        else:
            syndromes = self.field.matmul(annihilator, self.generator)
            closed = coord_set(np.flatnonzero(~syndromes.any(axis=0)) + 1)
        self._closure_cache[coords] = closed
        return closed

    def is_closed(self, members: Iterable[int]) -> bool:
        coords = coord_set(members)
        return self.closure(coords) == coords

    def restrict(self, members: Iterable[int]) -> "LinearCode":
        """C|_I on the ascending coordinates of I, re-based to H(I) rows.

        Raises:
            EmptySet: If I is empty
        """
        coords = self._check(members)
        if not coords:
            raise EmptySet("cannot restrict to the empty set")
        basis = linalg.row_space_basis(self.field, self._submatrix(coords))
        return LinearCode(
            self.field, basis, allow_zero_columns=self.allow_zero_columns
        )

    def shorten(self, members: Iterable[int]) -> "LinearCode":
        """C/I: codewords vanishing on I, with the coordinates of I removed.

        Raises:
            FullEntropyShorten: If H(I) = k
        """
        coords = self._check(members)
        if not coords:
            return self
        if self.entropy(coords) == self.k:
            raise FullEntropyShorten(
                f"H(I) = k = {self.k}; the shortened code would be zero-dimensional"
            )
        messages = linalg.null_space(self.field, self._submatrix(coords).T)
        rest = [e - 1 for e in range(1, self.n + 1) if e not in coords]
        shortened = self.field.matmul(messages, self.generator)[:, rest]
        return LinearCode(self.field, shortened, allow_zero_columns=True)

    def encode(self, message: np.ndarray) -> np.ndarray:
        return self.field.matmul(np.asarray(message)[None, :], self.generator)[0]


def code_from_matrix(
    field: FiniteField, rows: Iterable[Iterable[int]], *, allow_zero_columns=False
) -> LinearCode:
    """Build a code from explicit generator rows.

    Args:
        field: Alphabet
        rows: Basis rows of equal length
        allow_zero_columns: Accept all-zero columns

    Returns:
        The code generated by ``rows``

    Raises:
        RankDeficient: Rows are not a basis
        EntryOutOfRange: Entry not in [0, q)
        InvalidArgs: Ragged or empty input
    """
    materialized = [list(row) for row in rows]
    if not materialized or len({len(row) for row in materialized}) != 1:
        raise InvalidArgs("rows must be nonempty and of equal length")
    return LinearCode(
        field, np.array(materialized), allow_zero_columns=allow_zero_columns
    )


def _messages(q: int, length: int) -> np.ndarray:
    return np.array(list(itertools.product(range(q), repeat=length)), dtype=np.uint8)


def iter_codewords(
    code: LinearCode, *, cap: int = ENUMERATION_CAP
) -> Iterator[np.ndarray]:
    """Yield all q^k codewords in blocks, in a fixed message order.

    Raises:
        EnumerationCapExceeded: If q^k exceeds ``cap``
    """
    q, k = code.q, code.k
    if q**k > cap:
        raise EnumerationCapExceeded(
            f"{q}^{k} codewords exceed the enumeration cap {cap}"
        )
    head = 1
    while head < k and q ** (head + 1) <= _BLOCK_CODEWORDS:
        head += 1
    field = code.field
    head_words = field.matmul(_messages(q, head), code.generator[:head])
    tail = code.generator[head:]
    for tail_message in itertools.product(range(q), repeat=k - head):
        if tail.shape[0]:
            offset = field.matmul(np.array([tail_message], dtype=np.uint8), tail)
            yield field.add_table[head_words, offset]
        else:
            yield head_words


def weight_enumerator_bruteforce(
    code: LinearCode, *, cap: int = ENUMERATION_CAP
) -> WeightEnumerator:
    """Exact weight distribution by enumerating every codeword."""
    counts = np.zeros(code.n + 1, dtype=np.int64)
    for block in iter_codewords(code, cap=cap):
        weights = np.count_nonzero(block, axis=1)
        counts += np.bincount(weights, minlength=code.n + 1)
    logger.debug(f"Enumerated {int(counts.sum())} codewords of {code!r}")
    return WeightEnumerator.from_counts(dict(enumerate(counts.tolist())))


def min_distance(code: LinearCode, *, cap: int = ENUMERATION_CAP) -> int:
    return weight_enumerator_bruteforce(code, cap=cap).min_distance


def _canonical_prefix(field: FiniteField, matrix: np.ndarray) -> bytes:
    return linalg.row_space_basis(field, matrix).tobytes()


def permutation_equivalent(
    c1: LinearCode, c2: LinearCode, *, cap: int = PERMUTATION_SEARCH_CAP
) -> bool:
    """Decide whether a coordinate permutation maps c1 onto c2.

    Columns of c1 are matched to positions of c2 one at a time; a partial
    matching survives only while the restrictions of both codes to the matched
    prefix have the same canonical row space.

    Raises:
        InvalidArgs: Codes over different fields
        SearchCapExceeded: Length above ``cap``
    """
    if c1.q != c2.q:
        raise InvalidArgs("codes are over different fields")
    if (c1.n, c1.k) != (c2.n, c2.k):
        return False
    if c1.n > cap:
        raise SearchCapExceeded(
            f"n = {c1.n} exceeds the permutation search cap {cap}"
        )
    try:
        if weight_enumerator_bruteforce(c1) != weight_enumerator_bruteforce(c2):
            return False
    except EnumerationCapExceeded:
        pass

    field = c1.field
    g1, g2 = c1.generator, c2.generator
    targets = [_canonical_prefix(field, g2[:, : t + 1]) for t in range(c2.n)]
    chosen: list[int] = []
    used = [False] * c1.n

    def extend(depth: int) -> bool:
        if depth == c1.n:
            return True
        tried: set[bytes] = set()
        for col in range(c1.n):
            if used[col]:
                continue
            signature = g1[:, col].tobytes()
            if signature in tried:
                continue
            tried.add(signature)
            candidate = g1[:, chosen + [col]]
            if _canonical_prefix(field, candidate) != targets[depth]:
                continue
            used[col] = True
            chosen.append(col)
            if extend(depth + 1):
                return True
            chosen.pop()
            used[col] = False
        return False

    return extend(0)
