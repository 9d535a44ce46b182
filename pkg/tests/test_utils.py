"""Tests for the matrix text format and the display helpers."""

import pytest

from simplex_hlrc.algebra.codes import WeightEnumerator, permutation_equivalent
from simplex_hlrc.errors import MatrixFormatError
from simplex_hlrc.utils.formatting import (
    format_enumerator,
    format_locality_pair,
    format_params,
    format_rate,
    format_set,
)
from simplex_hlrc.utils.matrix_io import (
    format_matrix,
    parse_matrix,
    read_matrix,
    write_matrix,
)
from simplex_hlrc.utils.report_format import render_report


def test_format_matrix_header(code_4_2):
    text = format_matrix(code_4_2)
    lines = text.splitlines()
    assert lines[0] == "2 4 12"
    assert len(lines) == 5
    assert lines[1] == "0 0 0 0 1 1 1 1 1 1 1 1"
    assert text.endswith("\n")


def test_parse_matrix_reads_what_was_written(code_4_2, tmp_path):
    path = write_matrix(code_4_2, tmp_path / "out" / "G.txt")
    assert path.exists()
    assert read_matrix(path) == code_4_2


def test_parse_matrix_tolerates_trailing_blank_lines():
    code = parse_matrix("2 2 3\n1 0 1\n0 1 1\n\n")
    assert (code.n, code.k) == (3, 2)


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("2 2\n1 0\n0 1\n", 1),
        ("6 2 2\n1 0\n0 1\n", 1),
        ("2 0 2\n", 1),
        ("2 2 3\n1 0 1\n", 3),
        ("2 1 3\n1 0 1\n0 1 1\n", 3),
        ("2 2 3\n1 0 1\n0 1\n", 3),
        ("2 2 3\n1 0 2\n0 1 1\n", 2),
        ("2 2 3\n1 0 a\n0 1 1\n", 2),
    ],
)
def test_parse_matrix_errors(text, line):
    with pytest.raises(MatrixFormatError) as info:
        parse_matrix(text)
    assert info.value.line == line


def test_reading_back_permuted_matrix(code_4_2):
    rows = format_matrix(code_4_2).splitlines()
    flipped = [" ".join(reversed(row.split())) for row in rows[1:]]
    parsed = parse_matrix("\n".join([rows[0], *flipped]))
    assert parsed != code_4_2
    assert permutation_equivalent(parsed, code_4_2)


def test_format_helpers():
    assert format_params((12, 4, 6)) == "[12,4,6]"
    assert format_enumerator({8: 3, 0: 1, 6: 12}) == "{0:1, 6:12, 8:3}"
    assert format_enumerator(WeightEnumerator.from_counts({0: 1, 4: 7})) == "{0:1, 4:7}"
    assert format_set({3, 1, 2}) == "{1,2,3}"
    assert format_locality_pair(3, 2) == "(3,2)"
    assert format_rate(98, 100) == "98/100 (98.0%)"
    assert format_rate(0, 0) == "N/A"


def test_render_report():
    report = {
        "schema_version": 1,
        "code": {"q": 2, "params": (12, 4, 6), "reed_muller": False},
        "levels": [{"kappa": 3, "delta": 3}, {"kappa": 2, "delta": 2}],
        "hierarchy": None,
        "witnesses": [],
    }
    assert render_report(report) == (
        "schema_version: 1\n"
        "code:\n"
        "  q: 2\n"
        "  params: [12,4,6]\n"
        "  reed_muller: false\n"
        "levels:\n"
        "  - kappa: 3\n"
        "    delta: 3\n"
        "  - kappa: 2\n"
        "    delta: 2\n"
        "hierarchy: null\n"
        "witnesses: []\n"
    )


def test_render_report_nested_list_items():
    text = render_report({"bounds": [{"name": "cmg", "inputs": {"kappa": 2}}]})
    assert text == (
        "bounds:\n"
        "  - name: cmg\n"
        "    inputs:\n"
        "      kappa: 2\n"
    )
