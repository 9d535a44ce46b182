"""Plain-text generator matrix format.

Line 1 holds ``q k n``; the next k lines hold n space-separated entries in
[0, q). Blank trailing lines are ignored.
"""

from pathlib import Path

import numpy as np

from simplex_hlrc.algebra.codes import LinearCode, code_from_matrix
from simplex_hlrc.algebra.gf import make_field
from simplex_hlrc.errors import MatrixFormatError, UnsupportedOrder


def format_matrix(code: LinearCode) -> str:
    """Serialize a code's generator matrix.

    Returns:
        Text ending with a newline, e.g. "2 4 12\\n0 0 ...\\n"
    """
    lines = [f"{code.q} {code.k} {code.n}"]
    lines.extend(" ".join(str(int(v)) for v in row) for row in code.generator)
    return "\n".join(lines) + "\n"


def _integers(line: str, lineno: int) -> list[int]:
    try:
        return [int(token) for token in line.split()]
    except ValueError as e:
        raise MatrixFormatError(f"non-integer entry: {e}", lineno) from e


def parse_matrix(text: str) -> LinearCode:
    """Read a code from the matrix text format.

    Raises:
        MatrixFormatError: With the 1-based line number of the first problem
    """
    lines = text.rstrip("\n").split("\n") if text.strip() else []
    if not lines:
        raise MatrixFormatError("empty input, expected header 'q k n'", 1)
    header = _integers(lines[0], 1)
    if len(header) != 3:
        raise MatrixFormatError(f"header needs 3 integers, got {len(header)}", 1)
    q, k, n = header
    try:
        field = make_field(q)
    except UnsupportedOrder as e:
        raise MatrixFormatError(str(e), 1) from e
    if k < 1 or n < 1:
        raise MatrixFormatError(f"k and n must be positive (got k={k}, n={n})", 1)
    body = lines[1:]
    if len(body) != k:
        where = len(lines) + 1 if len(body) < k else k + 2
        raise MatrixFormatError(f"expected {k} matrix rows, found {len(body)}", where)
    rows = []
    for lineno, line in enumerate(body, start=2):
        row = _integers(line, lineno)
        if len(row) != n:
            raise MatrixFormatError(f"expected {n} entries, found {len(row)}", lineno)
        bad = [v for v in row if not 0 <= v < q]
        if bad:
            raise MatrixFormatError(f"entry {bad[0]} outside [0, {q})", lineno)
        rows.append(row)
    return code_from_matrix(field, np.array(rows, dtype=np.uint8))


def write_matrix(code: LinearCode, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_matrix(code), encoding="utf-8")
    return path


def read_matrix(path: Path) -> LinearCode:
    return parse_matrix(path.read_text(encoding="utf-8"))
