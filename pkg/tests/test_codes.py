"""Tests for linear codes: entropy, closure, restriction, shortening."""

import numpy as np
import pytest

from simplex_hlrc.algebra.codes import (
    LinearCode,
    WeightEnumerator,
    code_from_matrix,
    iter_codewords,
    min_distance,
    permutation_equivalent,
    weight_enumerator_bruteforce,
)
from simplex_hlrc.algebra.gf import make_field
from simplex_hlrc.construction.simplex import punctured_simplex, simplex
from simplex_hlrc.errors import (
    EmptySet,
    EnumerationCapExceeded,
    FullEntropyShorten,
    IndexOutOfRange,
    InvalidArgs,
    RankDeficient,
    SearchCapExceeded,
)

GF2 = make_field(2)


def test_code_from_matrix():
    code = code_from_matrix(GF2, [(1, 0, 1), (0, 1, 1)])
    assert (code.n, code.k) == (3, 2)


def test_rank_deficient_rows():
    with pytest.raises(RankDeficient):
        code_from_matrix(GF2, [(1, 1), (1, 1)])


def test_ragged_rows():
    with pytest.raises(InvalidArgs):
        code_from_matrix(GF2, [(1, 0), (0, 1, 1)])


def test_zero_column_needs_opt_in():
    with pytest.raises(InvalidArgs):
        code_from_matrix(GF2, [(1, 0)])
    code = code_from_matrix(GF2, [(1, 0)], allow_zero_columns=True)
    assert code.n == 2


def test_example_matrix_with_deleted_columns():
    # binary Simplex columns 1..15 as integers; 3, 4 and 7 span a plane
    full = np.array(
        [[(c >> (3 - row)) & 1 for c in range(1, 16)] for row in range(4)]
    )
    kept = [c for c in range(15) if c + 1 not in (3, 4, 7)]
    code = code_from_matrix(GF2, full[:, kept])
    assert (code.n, code.k) == (12, 4)
    assert min_distance(code) == 6


def test_entropy(code_4_2):
    assert code_4_2.entropy([]) == 0
    assert code_4_2.entropy(range(1, 13)) == 4
    assert code_4_2.entropy({1, 2}) == 2


def test_entropy_rejects_bad_index(code_4_2):
    with pytest.raises(IndexOutOfRange):
        code_4_2.entropy({0})
    with pytest.raises(IndexOutOfRange):
        code_4_2.entropy({13})


def test_closure(code_4_2):
    assert code_4_2.closure(set()) == frozenset()
    assert code_4_2.closure({1}) == {1}
    # 0100 + 0101 = 0001 was deleted
    assert code_4_2.closure({1, 2}) == {1, 2}
    assert code_4_2.closure({1, 2, 3}) == code_4_2.closure({1, 2, 3, 4})
    assert code_4_2.is_closed({1, 2, 3, 4})
    assert not code_4_2.is_closed({1, 2, 3})


def test_closure_is_idempotent_and_monotone(code_4_2):
    rng = np.random.Generator(np.random.PCG64(11))
    for _ in range(30):
        members = set(rng.choice(np.arange(1, 13), size=3, replace=False).tolist())
        closed = code_4_2.closure(members)
        assert members <= closed
        assert code_4_2.closure(closed) == closed
        assert code_4_2.is_closed(closed)
        assert code_4_2.entropy(closed) == code_4_2.entropy(members)


def test_restrict_full_is_same_code(code_4_2):
    restricted = code_4_2.restrict(range(1, 13))
    assert permutation_equivalent(restricted, code_4_2)
    assert restricted.k == 4


def test_restrict_empty(code_4_2):
    with pytest.raises(EmptySet):
        code_4_2.restrict(set())


def test_shorten(code_4_2):
    assert code_4_2.shorten(set()) is code_4_2
    shortened = code_4_2.shorten({1})
    assert (shortened.n, shortened.k) == (11, 3)
    assert min_distance(shortened) >= 6
    with pytest.raises(FullEntropyShorten):
        code_4_2.shorten(range(1, 13))


def test_min_distance():
    assert min_distance(punctured_simplex(2, 4, 2)) == 6
    assert min_distance(simplex(2, 3)) == 4
    assert min_distance(punctured_simplex(2, 3, 1)) == 3


def test_weight_enumerators():
    full = code_from_matrix(GF2, [(1, 0), (0, 1)])
    assert weight_enumerator_bruteforce(full).counts == {0: 1, 1: 2, 2: 1}
    assert weight_enumerator_bruteforce(punctured_simplex(2, 4, 2)).counts == {
        0: 1,
        6: 12,
        8: 3,
    }
    assert weight_enumerator_bruteforce(simplex(2, 3)).counts == {0: 1, 4: 7}


def test_weight_enumerator_helpers():
    enumerator = WeightEnumerator.from_counts({0: 1, 6: 12, 8: 3, 7: 0})
    assert enumerator.total == 16
    assert enumerator.min_distance == 6
    assert enumerator[7] == 0
    assert enumerator.polynomial() == "1 + 12y^6 + 3y^8"


def test_iter_codewords_respects_cap(code_4_2):
    assert sum(block.shape[0] for block in iter_codewords(code_4_2)) == 16
    with pytest.raises(EnumerationCapExceeded):
        list(iter_codewords(code_4_2, cap=15))


def test_permutation_equivalence(code_4_2):
    assert permutation_equivalent(code_4_2, code_4_2)
    reversed_code = LinearCode(GF2, code_4_2.generator[:, ::-1])
    assert permutation_equivalent(code_4_2, reversed_code)


def test_duplicate_columns_are_not_equivalent():
    distinct = code_from_matrix(GF2, [(1, 0, 1), (0, 1, 1)])
    repeated = code_from_matrix(GF2, [(1, 0, 1), (0, 1, 0)])
    assert not permutation_equivalent(distinct, repeated)


def test_permutation_equivalence_caps():
    with pytest.raises(SearchCapExceeded):
        permutation_equivalent(simplex(2, 4), simplex(2, 4), cap=14)
    with pytest.raises(InvalidArgs):
        permutation_equivalent(simplex(2, 2), simplex(3, 2))


def test_codes_are_hashable(code_4_2):
    assert code_4_2 == punctured_simplex(2, 4, 2)
    assert len({code_4_2, punctured_simplex(2, 4, 2)}) == 1
