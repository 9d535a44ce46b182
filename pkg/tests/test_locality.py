"""Tests for restriction types, hyperplane classification, local sets and chains."""

from collections import Counter

import pytest

from simplex_hlrc.algebra.codes import min_distance, weight_enumerator_bruteforce
from simplex_hlrc.bounds.hierarchical import HierLocalityParams
from simplex_hlrc.construction.simplex import PuncturedSimplexSpec, punctured_simplex
from simplex_hlrc.errors import InvalidArgs
from simplex_hlrc.locality.classifier import (
    classify_flats,
    classify_hyperplanes,
    hyperplane_correspondence,
    matches_type,
)
from simplex_hlrc.locality.enumerator import weight_enumerator_formula
from simplex_hlrc.locality.local_sets import (
    chain_levels,
    descent_path,
    find_local_set,
    hierarchy_chain,
    local_set_coverage,
)
from simplex_hlrc.locality.profile import hierarchy_parameters, locality_profile
from simplex_hlrc.locality.restriction_types import (
    RestrictionType,
    chain_type,
    restriction_type_range,
)
from simplex_hlrc.locality.verification import chain_sets, verify_hlrc


def test_restriction_type_range():
    assert restriction_type_range(4, 2, 3) == [1, 2]
    assert restriction_type_range(5, 0, 3) == [0]
    assert restriction_type_range(5, 4, 3) == [2]
    with pytest.raises(InvalidArgs):
        restriction_type_range(2, 0, 2)
    with pytest.raises(InvalidArgs):
        restriction_type_range(5, 2, 5)


def test_restriction_type_parameters():
    assert RestrictionType(3, 1).params == (6, 3, 3)
    assert RestrictionType(3, 2).params == (4, 3, 2)
    assert RestrictionType(2, 0).params == (3, 2, 2)
    assert RestrictionType(2, 1).params == (2, 2, 1)
    assert RestrictionType(2, 1, q=3).params == (3, 2, 2)
    assert str(RestrictionType(3, 1)) == "S(3)-S(1) [6,3,3]"
    with pytest.raises(InvalidArgs):
        RestrictionType(2, 2)


def test_chain_type():
    assert chain_type(2, 4, 2, 3) == RestrictionType(3, 1)
    assert chain_type(2, 4, 2, 2) == RestrictionType(2, 0)
    assert chain_type(2, 5, 4, 3) == RestrictionType(3, 2)


@pytest.mark.parametrize(
    "q, m, s",
    [(q, m, s) for q in (2, 3) for m in range(2, 6) for s in range(m)],
)
def test_weight_enumerator_formula_matches_brute_force(q, m, s):
    formula = weight_enumerator_formula(q, m, s)
    assert formula == weight_enumerator_bruteforce(punctured_simplex(q, m, s))


def test_weight_enumerator_examples():
    assert weight_enumerator_formula(2, 4, 2).counts == {0: 1, 6: 12, 8: 3}
    assert weight_enumerator_formula(3, 3, 1).counts == {0: 1, 8: 18, 9: 8}
    assert weight_enumerator_formula(2, 3, 0).counts == {0: 1, 4: 7}


def test_classify_hyperplanes_running_example():
    classes = classify_hyperplanes(2, 4, 2)
    counts = {t.params: c.count for t, c in classes.items()}
    assert counts == {(6, 3, 3): 12, (4, 3, 2): 3}
    for rtype, found in classes.items():
        assert all(len(h) == rtype.length for h in found.hyperplanes)


def test_classify_hyperplanes_reed_muller_type():
    classes = classify_hyperplanes(2, 4, 3)
    assert list(classes) == [RestrictionType(3, 2)]
    assert classes[RestrictionType(3, 2)].count == 14


def test_classify_hyperplanes_simplex():
    classes = classify_hyperplanes(2, 3, 0)
    assert {t.params: c.count for t, c in classes.items()} == {(3, 2, 2): 7}


@pytest.mark.parametrize(
    "q, m, s",
    [(q, m, s) for q in (2, 3) for m in (3, 4) for s in range(m)],
)
def test_hyperplane_map_of_deletion_is_bijective(q, m, s):
    correspondence = hyperplane_correspondence(q, m, s)
    assert correspondence.injective
    assert correspondence.surjective
    assert correspondence.bijective


def test_classify_flats_is_complete():
    typed = classify_flats(2, 4, 2)
    counts = Counter((t.kappa, t.i) for t in typed.values())
    assert counts == {(2, 0): 16, (2, 1): 18, (3, 1): 12, (3, 2): 3}


BINARY_UP_TO_5 = [(m, s) for m in range(3, 6) for s in range(m)]


@pytest.mark.parametrize("m, s", BINARY_UP_TO_5)
def test_every_closed_set_gets_one_type(m, s):
    code = punctured_simplex(2, m, s)
    typed = classify_flats(2, m, s)
    assert {t.kappa for t in typed.values()} == set(range(2, m))
    for flat, rtype in typed.items():
        assert code.entropy(flat) == rtype.kappa
        assert rtype.i in restriction_type_range(m, s, rtype.kappa)


@pytest.mark.parametrize("m, s", BINARY_UP_TO_5)
def test_every_symbol_has_a_local_set_of_each_type(m, s):
    spec = PuncturedSimplexSpec(2, m, s)
    code = punctured_simplex(2, m, s)
    assert spec.distance >= 2
    served = local_set_coverage(code, spec)
    expected = {
        (kappa, i)
        for kappa in range(2, m)
        for i in restriction_type_range(m, s, kappa)
    }
    assert set(served) == expected
    assert set(served.values()) == {code.n}


def test_matches_type(code_4_2):
    small = classify_hyperplanes(2, 4, 2)[RestrictionType(3, 2)].hyperplanes[0]
    assert matches_type(code_4_2, small, RestrictionType(3, 2))
    assert not matches_type(code_4_2, small, RestrictionType(3, 1))


def test_descent_path(spec_4_2):
    assert descent_path(spec_4_2, 2, 0) == [
        RestrictionType(3, 1),
        RestrictionType(2, 0),
    ]
    assert descent_path(spec_4_2, 3, 2) == [RestrictionType(3, 2)]


@pytest.mark.parametrize(
    "kappa, i, params",
    [(3, 1, (6, 3, 3)), (3, 2, (4, 3, 2)), (2, 0, (3, 2, 2)), (2, 1, (2, 2, 1))],
)
def test_find_local_set(code_4_2, spec_4_2, kappa, i, params):
    for symbol in (1, 7, 12):
        local = find_local_set(code_4_2, spec_4_2, symbol, kappa, i)
        restricted = code_4_2.restrict(local)
        assert symbol in local
        assert code_4_2.closure(local) == local
        assert (restricted.n, restricted.k, min_distance(restricted)) == params


def test_find_local_set_rejects_bad_arguments(code_4_2, spec_4_2):
    with pytest.raises(InvalidArgs):
        find_local_set(code_4_2, spec_4_2, 13, 3, 1)
    with pytest.raises(InvalidArgs):
        find_local_set(code_4_2, spec_4_2, 1, 3, 0)


def test_local_set_coverage(code_4_2, spec_4_2):
    served = local_set_coverage(code_4_2, spec_4_2)
    assert served == {(3, 1): 12, (3, 2): 12, (2, 0): 12, (2, 1): 12}


def test_hierarchy_chain_running_example(code_4_2, spec_4_2):
    for symbol in range(1, 13):
        inner, outer = hierarchy_chain(code_4_2, spec_4_2, symbol)
        assert inner.rtype.params == (3, 2, 2)
        assert outer.rtype.params == (6, 3, 3)
        assert symbol in inner.members
        assert inner.members <= outer.members


@pytest.mark.parametrize(
    "q, m, s, expected",
    [
        (2, 4, 2, [(3, 3), (2, 2)]),
        (2, 4, 3, [(3, 2)]),
        (2, 5, 4, [(4, 4), (3, 2)]),
        (2, 4, 0, [(3, 4), (2, 2)]),
        (3, 4, 0, [(3, 9), (2, 3)]),
        (3, 3, 2, [(2, 2)]),
    ],
)
def test_hierarchy_parameters(q, m, s, expected):
    params = hierarchy_parameters(PuncturedSimplexSpec(q, m, s))
    assert params == HierLocalityParams.of(expected)


@pytest.mark.parametrize("m", [4, 5, 6])
def test_binary_reed_muller_chain_has_m_minus_3_levels(m):
    levels = chain_levels(PuncturedSimplexSpec(2, m, m - 1))
    assert len(levels) == m - 3
    assert levels[-1].kappa == 3


def test_no_hierarchy_below_m_3():
    assert hierarchy_parameters(PuncturedSimplexSpec(2, 2, 0)) is None
    assert hierarchy_parameters(PuncturedSimplexSpec(2, 3, 2)) is None


def test_locality_profile_running_example():
    profile = locality_profile(2, 4, 2)
    pairs = [(loc.r_size, loc.delta) for loc in profile.localities]
    assert pairs == [(4, 3), (3, 2), (2, 2)]
    assert [loc.r_dimension for loc in profile.localities] == [3, 3, 2]
    assert profile.hierarchy == HierLocalityParams.of([(3, 3), (2, 2)])
    assert profile.chains == {}


def test_locality_profile_ternary_plane():
    profile = locality_profile(3, 3, 2)
    assert [loc.rtype.params for loc in profile.localities] == [(3, 2, 2)]


def test_locality_profile_reed_muller_type():
    profile = locality_profile(2, 5, 4)
    assert [loc.rtype.params for loc in profile.localities] == [(8, 4, 4), (4, 3, 2)]


def test_locality_profile_needs_m_3():
    with pytest.raises(InvalidArgs):
        locality_profile(2, 2, 0)


def test_verify_hlrc(code_4_2):
    profile = locality_profile(2, 4, 2, with_chains=True)
    chains = {e: chain_sets(links) for e, links in profile.chains.items()}
    assert verify_hlrc(code_4_2, chains, profile.hierarchy)

    verdict = verify_hlrc(code_4_2, chains, HierLocalityParams.of([(3, 4), (2, 2)]))
    assert not verdict
    assert "distance 3 < delta=4" in verdict.witness


def test_verify_hlrc_single_vacuous_level(code_4_2):
    everything = frozenset(range(1, 13))
    chains = {e: [everything] for e in range(1, 13)}
    assert verify_hlrc(code_4_2, chains, HierLocalityParams.of([(4, 1)])).ok


def test_verify_hlrc_reports_missing_and_foreign_sets(code_4_2):
    params = HierLocalityParams.of([(4, 1)])
    verdict = verify_hlrc(code_4_2, {}, params)
    assert verdict.witness == "symbol 1: 0 sets for 1 levels"

    chains = {e: [frozenset({1, 2})] for e in range(1, 13)}
    verdict = verify_hlrc(code_4_2, chains, params)
    assert "symbol 3" in verdict.witness
    assert "does not contain the symbol" in verdict.witness
