"""Gauss-Jordan elimination over GF(q)."""

import numpy as np

from simplex_hlrc.algebra.gf import FiniteField


def row_reduce(
    field: FiniteField, matrix: np.ndarray
) -> tuple[np.ndarray, tuple[int, ...]]:
    """Return the reduced row echelon form of ``matrix`` and its pivot columns.

    Pivots are taken column by column, using the first nonzero entry at or below
    the current row. The input is copied and not mutated.

    Args:
        field: Arithmetic context
        matrix: 2-D array with entries in [0, q)

    Returns:
        (rref, pivots) where rref has the input's shape
    """
    mat = np.array(matrix, dtype=np.uint8, copy=True, ndmin=2)
    num_rows, num_cols = mat.shape
    pivots: list[int] = []
    row = 0
    for col in range(num_cols):
        if row >= num_rows:
            break
        candidates = np.flatnonzero(mat[row:, col])
        if candidates.size == 0:
            continue
        pivot_row = row + int(candidates[0])
        if pivot_row != row:
            mat[[row, pivot_row]] = mat[[pivot_row, row]]
        mat[row] = field.mul_table[field.inv_table[mat[row, col]], mat[row]]
        factors = mat[:, col].copy()
        factors[row] = 0
        others = np.flatnonzero(factors)
        if others.size:
            scaled = field.mul_table[factors[others, None], mat[row][None, :]]
            mat[others] = field.sub_table[mat[others], scaled]
        pivots.append(col)
        row += 1
    return mat, tuple(pivots)


def rank(field: FiniteField, matrix: np.ndarray) -> int:
    """Rank of ``matrix`` over GF(q)."""
    mat = np.asarray(matrix)
    if mat.size == 0:
        return 0
    return len(row_reduce(field, mat)[1])


def row_space_basis(field: FiniteField, matrix: np.ndarray) -> np.ndarray:
    """Canonical basis of the row space: the nonzero rows of the RREF."""
    rref, pivots = row_reduce(field, matrix)
    return rref[: len(pivots)]


def null_space(field: FiniteField, matrix: np.ndarray) -> np.ndarray:
    """Rows spanning ``{x : matrix @ x = 0}``.

    Args:
        field: Arithmetic context
        matrix: r x c array

    Returns:
        (c - rank) x c array, one basis vector per free column
    """
    mat = np.asarray(matrix, dtype=np.uint8)
    num_cols = mat.shape[1]
    if mat.shape[0] == 0:
        return np.eye(num_cols, dtype=np.uint8)
    rref, pivots = row_reduce(field, mat)
    free = [c for c in range(num_cols) if c not in pivots]
    basis = np.zeros((len(free), num_cols), dtype=np.uint8)
    for idx, col in enumerate(free):
        basis[idx, col] = 1
        for pivot_row, pivot_col in enumerate(pivots):
            basis[idx, pivot_col] = field.neg_table[rref[pivot_row, col]]
    return basis


def solve(
    field: FiniteField, matrix: np.ndarray, rhs: np.ndarray
) -> np.ndarray | None:
    """Find one solution of ``matrix @ x = rhs``.

    Args:
        field: Arithmetic context
        matrix: r x c coefficient array
        rhs: length-r vector

    Returns:
        A length-c solution with free variables set to 0, or None if the
        system is inconsistent
    """
    mat = np.asarray(matrix, dtype=np.uint8)
    column = np.asarray(rhs, dtype=np.uint8)[:, None]
    augmented = np.concatenate([mat, column], axis=1)
    rref, pivots = row_reduce(field, augmented)
    num_cols = mat.shape[1]
    if pivots and pivots[-1] == num_cols:
        return None
    solution = np.zeros(num_cols, dtype=np.uint8)
    for pivot_row, pivot_col in enumerate(pivots):
        solution[pivot_col] = rref[pivot_row, num_cols]
    return solution
