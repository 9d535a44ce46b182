"""Tests for the classical and hierarchical bounds."""

import numpy as np
import pytest

from simplex_hlrc.bounds.classical import (
    BoundValue,
    abhmt_bound,
    cmg_bound,
    griesmer,
    k_opt,
    log_max_codebook,
)
from simplex_hlrc.bounds.hierarchical import (
    HierLocalityParams,
    cm_hlrc_bound,
    lemma_size_bound,
    parse_locality,
    singleton_hlrc,
)
from simplex_hlrc.errors import InvalidArgs, LocalityParseError

RUNNING = HierLocalityParams.of([(3, 3), (2, 2)])


def test_griesmer():
    assert griesmer(2, 1, 5) == 5
    assert griesmer(2, 4, 6) == 12
    assert griesmer(2, 3, 4) == 7
    assert griesmer(3, 3, 8) == 8 + 3 + 1
    assert griesmer(2, 0, 6) == 0
    with pytest.raises(InvalidArgs):
        griesmer(2, -1, 6)
    with pytest.raises(InvalidArgs):
        griesmer(2, 3, 0)


def test_k_opt():
    assert k_opt(2, 5, 6) == 0
    assert k_opt(2, 12, 6) == 4
    assert k_opt(2, 9, 6) == 2
    assert k_opt(2, 7, 4) == 3
    with pytest.raises(InvalidArgs):
        k_opt(2, 7, 0)


def test_log_max_codebook():
    assert log_max_codebook(2, 3, 2) == 2
    assert log_max_codebook(2, 5, 3) == 2
    assert log_max_codebook(2, 7, 4) == 3


def test_abhmt_bound():
    assert abhmt_bound(2, 12, 6, 2, 2) == 8
    assert abhmt_bound(2, 12, 6, 3, 3) == 6
    # d = n + 1 leaves a multiplier of one
    assert abhmt_bound(2, 5, 6, 2, 2) == 2
    with pytest.raises(InvalidArgs):
        abhmt_bound(2, 12, 6, 2, 1)


def test_cmg_bound():
    bound = cmg_bound(2, 12, 6, 2, 2)
    assert bound.value == 4
    assert {0, 2} <= set(bound.binding_lambdas)
    assert bound.binding_lambdas == (0, 1, 2, 3)
    assert bound.binding_lambda == 0
    assert cmg_bound(2, 7, 4, 2, 2).value == 3
    with pytest.raises(InvalidArgs):
        cmg_bound(2, 12, 6, 0, 2)


@pytest.mark.parametrize("kappa, delta", [(2, 2), (3, 2), (3, 3), (4, 5)])
def test_cmg_lambda_zero_term_is_k_opt(kappa, delta):
    for n, d in [(12, 6), (15, 8), (20, 7)]:
        assert cmg_bound(2, n, d, kappa, delta).value <= k_opt(2, n, d)


def test_bound_value_from_terms():
    bound = BoundValue.from_terms([5, 3, 4, 3])
    assert bound.value == 3
    assert bound.binding_lambdas == (1, 3)


def test_hier_params_validation():
    assert RUNNING.height == 2
    assert RUNNING.ranks == (3, 2)
    assert RUNNING.deltas == (3, 2)
    assert str(RUNNING) == "[(3,3),(2,2)]"
    with pytest.raises(InvalidArgs):
        HierLocalityParams.of([(3, 2), (2, 2)])
    with pytest.raises(InvalidArgs):
        HierLocalityParams.of([(2, 3), (3, 2)])
    with pytest.raises(InvalidArgs):
        HierLocalityParams.of([])


def test_parse_locality():
    assert parse_locality("3,3;2,2") == RUNNING
    assert parse_locality(" 3, 3 ; 2, 2 ") == RUNNING
    assert parse_locality("") is None


@pytest.mark.parametrize(
    "text, offset",
    [
        ("3,3;2", 4),
        ("3,x;2,2", 2),
        ("3,3;2,3", 4),
        ("3,3,1", 0),
        ("3,\u00b2", 2),
        ("\u0663,3", 0),
    ],
)
def test_parse_locality_errors(text, offset):
    with pytest.raises(LocalityParseError) as info:
        parse_locality(text)
    assert info.value.position == offset


def test_lemma_size_bound():
    assert lemma_size_bound(RUNNING, 0) == 0
    assert lemma_size_bound(RUNNING, 2) == 3
    assert lemma_size_bound(RUNNING, 3) == 5


def test_singleton_hlrc():
    assert singleton_hlrc(12, 4, RUNNING) == 7
    assert singleton_hlrc(12, 1, RUNNING) == 12
    with pytest.raises(InvalidArgs):
        singleton_hlrc(3, 4, RUNNING)


def test_singleton_two_level_formula_matches_general_one():
    rng = np.random.Generator(np.random.PCG64(5))
    for _ in range(50):
        r2 = int(rng.integers(1, 5))
        r1 = r2 + int(rng.integers(0, 4))
        d2 = int(rng.integers(2, 5))
        d1 = d2 + int(rng.integers(1, 5))
        k = int(rng.integers(1, 10))
        n = k + int(rng.integers(0, 30))
        params = HierLocalityParams.of([(r1, d1), (r2, d2)])
        two_level = (
            n - k + 1 - ((k - 1) // r2) * (d2 - 1) - ((k - 1) // r1) * (d1 - d2)
        )
        assert singleton_hlrc(n, k, params) == two_level


def test_cm_hlrc_bound_running_example():
    bound = cm_hlrc_bound(2, 12, 6, RUNNING)
    assert bound.value == 4
    assert bound.binding_lambda == 0
    assert {0, 2, 3} <= set(bound.binding_lambdas)


def test_cm_hlrc_bound_rejects_bad_lengths():
    with pytest.raises(InvalidArgs):
        cm_hlrc_bound(2, 0, 6, RUNNING)


def test_cm_hlrc_is_monotone_in_delta():
    rng = np.random.Generator(np.random.PCG64(9))
    for _ in range(40):
        r2 = int(rng.integers(1, 4))
        r1 = r2 + int(rng.integers(0, 3))
        d2 = int(rng.integers(2, 4))
        d1 = d2 + int(rng.integers(1, 4))
        n = int(rng.integers(10, 40))
        d = int(rng.integers(2, n // 2))
        base = cm_hlrc_bound(2, n, d, HierLocalityParams.of([(r1, d1), (r2, d2)]))
        coarser = cm_hlrc_bound(
            2, n, d, HierLocalityParams.of([(r1, d1 + 1), (r2, d2)])
        )
        assert coarser.value <= base.value
