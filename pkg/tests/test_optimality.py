"""Tests for the optimality report over punctured Simplex codes."""

import pytest

from simplex_hlrc.bounds.optimality import (
    ALPHABET_OPTIMAL_ONLY,
    MEETS,
    OPTIMAL,
    SINGLETON_ACHIEVING,
    optimality_report,
)
from simplex_hlrc.construction.simplex import PuncturedSimplexSpec
from simplex_hlrc.errors import InvalidArgs


def test_running_example_report():
    report = optimality_report(2, 4, 2)
    assert report.optimal
    assert report.witness is None

    (griesmer,) = report.by_name("griesmer")
    assert (griesmer.value, griesmer.verdict) == (12, MEETS)
    (k_opt,) = report.by_name("k_opt")
    assert (k_opt.value, k_opt.verdict) == (4, OPTIMAL)

    assert [record.value for record in report.by_name("cmg")] == [4, 4, 4]
    assert all(record.value >= 4 for record in report.by_name("abhmt"))

    (hlrc,) = report.by_name("cm_hlrc")
    assert hlrc.value == 4
    assert hlrc.binding_lambda == 0
    assert hlrc.inputs["locality"] == "[(3,3),(2,2)]"

    (singleton,) = report.by_name("singleton")
    assert singleton.value == 7
    assert singleton.verdict == ALPHABET_OPTIMAL_ONLY


def test_code_without_hierarchy_has_no_hierarchy_records():
    report = optimality_report(2, 3, 2)
    assert report.optimal
    assert report.by_name("cm_hlrc") == []
    assert report.by_name("singleton") == []


@pytest.mark.parametrize(
    "m, s",
    [
        (m, s)
        for m in range(3, 6)
        for s in range(m)
        if PuncturedSimplexSpec(2, m, s).distance >= 2
    ],
)
def test_binary_table_codes_are_optimal(m, s):
    report = optimality_report(2, m, s)
    assert report.optimal, report.witness


def test_needs_three_dimensions():
    with pytest.raises(InvalidArgs):
        optimality_report(2, 2, 0)


@pytest.mark.parametrize(
    "s, n, d",
    [(0, 63, 32), (1, 62, 31), (2, 60, 30), (3, 56, 28), (4, 48, 24)],
)
def test_six_dimensional_codes_meet_the_hierarchical_bound(s, n, d):
    report = optimality_report(2, 6, s)
    assert report.spec.params == (n, 6, d)
    (hlrc,) = report.by_name("cm_hlrc")
    assert hlrc.value == 6
    assert hlrc.verdict == OPTIMAL
    (singleton,) = report.by_name("singleton")
    assert singleton.verdict in {SINGLETON_ACHIEVING, ALPHABET_OPTIMAL_ONLY}
    assert d <= singleton.value
