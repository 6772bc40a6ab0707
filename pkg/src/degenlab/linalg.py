"""Dense exact linear algebra over the coefficient fields."""

from __future__ import annotations

from typing import List, Sequence, Tuple


def row_reduce(rows: List[List[object]], fld) -> Tuple[int, List[int]]:
    """In-place forward elimination; returns (rank, pivot column indices)."""
    if not rows:
        return 0, []
    ncols = len(rows[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c] != fld.zero:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = fld.inv(rows[r][c])
        row_r = rows[r]
        for j in range(c, ncols):
            row_r[j] = fld.mul(row_r[j], inv)
        for i in range(len(rows)):
            if i != r and rows[i][c] != fld.zero:
                factor = rows[i][c]
                row_i = rows[i]
                for j in range(c, ncols):
                    row_i[j] = fld.sub(row_i[j], fld.mul(factor, row_r[j]))
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return r, pivots


def matrix_rank(rows: Sequence[Sequence[object]], fld) -> int:
    work = [list(r) for r in rows]
    rank, _ = row_reduce(work, fld)
    return rank


def is_invertible(rows: Sequence[Sequence[object]], fld) -> bool:
    n = len(rows)
    return all(len(r) == n for r in rows) and matrix_rank(rows, fld) == n
