"""Exact linear algebra over the Gaussian-rational scalars.

Row reduction with exact field division; rank and kernel decisions are
never numerical.
"""

from __future__ import annotations

from .scalars import ONE, ZERO, Scalar


def row_reduce(rows: list[list[Scalar]], ncols: int):
    """Reduced row echelon form.  Returns (matrix, pivot column list)."""
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if not mat[i][c].is_zero:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = ONE / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and not mat[i][c].is_zero:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def rank(rows: list[list[Scalar]], ncols: int) -> int:
    return len(row_reduce(rows, ncols)[1])


def nullspace(rows: list[list[Scalar]], ncols: int) -> list[list[Scalar]]:
    """Basis of the kernel of the matrix, one vector per free column."""
    mat, pivots = row_reduce(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [ZERO] * ncols
        vec[free] = ONE
        for row_idx, pivot_col in enumerate(pivots):
            vec[pivot_col] = -mat[row_idx][free]
        basis.append(vec)
    return basis
