"""Exact nullspaces over Q and Q(sqrt d)."""

from __future__ import annotations

from typing import Sequence

from .scalars import ONE, ZERO, FieldScalar, as_scalar


def rref(matrix: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list[FieldScalar]], list[int]]:
    """Reduced row echelon form and the pivot columns."""
    rows = [[as_scalar(x) for x in row] for row in matrix]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if not rows[i][col].is_zero()), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def exact_kernel(matrix: Sequence[Sequence], ncols: int | None = None) -> list[list[FieldScalar]]:
    """Basis of ``{x : M x = 0}``, one vector per free column.

    Each basis vector has a 1 in its free column, zeros in the other free
    columns and the negated reduced entries in the pivot columns.
    """
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    reduced, pivots = rref(matrix, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        vec = [ZERO] * ncols
        vec[f] = ONE
        for row, p in zip(reduced, pivots):
            vec[p] = -row[f]
        basis.append(vec)
    return basis


def mat_vec(matrix: Sequence[Sequence[FieldScalar]], vec: Sequence[FieldScalar]) -> list[FieldScalar]:
    out = []
    for row in matrix:
        acc = ZERO
        for a, b in zip(row, vec):
            acc = acc + a * b
        out.append(acc)
    return out
