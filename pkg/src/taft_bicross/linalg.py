"""Exact linear algebra over Q(zeta_L) on sparse row dictionaries."""

from __future__ import annotations

from typing import Mapping, Sequence

from .cyclotomic import CycScalar

SparseRow = dict[int, CycScalar]


def columns_to_rows(cols: Sequence[Mapping[int, CycScalar]]) -> list[SparseRow]:
    """Transpose a list of sparse columns (col j -> {row: value}) into sparse rows."""
    n_rows = 1 + max((r for c in cols for r in c), default=-1)
    rows: list[SparseRow] = [dict() for _ in range(n_rows)]
    for j, col in enumerate(cols):
        for i, v in col.items():
            if v:
                rows[i][j] = v
    return rows


def bareiss_rank(rows: Sequence[Mapping[int, CycScalar]], n_cols: int | None = None) -> int:
    """Rank by fraction-free (Bareiss) elimination, pivoting on the first nonzero entry.

    Each update is (pivot * a_ij - a_ik * p_kj) / previous_pivot, which is an
    exact division in the Bareiss scheme.
    """
    work = [dict((j, v) for j, v in r.items() if v) for r in rows]
    work = [r for r in work if r]
    if not work:
        return 0
    if n_cols is None:
        n_cols = 1 + max(j for r in work for j in r)
    rank = 0
    prev: CycScalar | None = None
    for col in range(n_cols):
        piv = next((i for i in range(rank, len(work)) if col in work[i]), None)
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        pval = prow[col]
        inv_prev = prev.inverse() if prev is not None else None
        for i in range(rank + 1, len(work)):
            row = work[i]
            a = row.get(col)
            new: SparseRow = {}
            for j, v in row.items():
                t = pval * v
                if t:
                    new[j] = t
            if a is not None:
                for j, pv in prow.items():
                    t = new.get(j)
                    d = -(a * pv)
                    t = d if t is None else t + d
                    if t:
                        new[j] = t
                    else:
                        new.pop(j, None)
            if inv_prev is not None:
                new = {j: v * inv_prev for j, v in new.items()}
            work[i] = new
        prev = pval
        rank += 1
        # rows that vanished can be dropped from the tail
        work = work[: rank] + [r for r in work[rank:] if r]
        if rank == len(work):
            break
    return rank


def inverse_columns(cols: Sequence[Mapping[int, CycScalar]], order: int) -> list[SparseRow]:
    """Inverse of a square matrix given by sparse columns, returned as sparse columns.

    Gauss-Jordan on the augmented rows; raises ValueError when singular.
    """
    n = len(cols)
    one = CycScalar.one(order)
    rows = columns_to_rows(cols)
    rows += [dict() for _ in range(n - len(rows))]
    aug = [(dict(rows[i]), {i: one}) for i in range(n)]
    for col in range(n):
        piv = next((i for i in range(col, n) if col in aug[i][0]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        left, right = aug[col]
        inv = left[col].inverse()
        left = {j: v * inv for j, v in left.items()}
        right = {j: v * inv for j, v in right.items()}
        aug[col] = (left, right)
        for i in range(n):
            if i == col:
                continue
            li, ri = aug[i]
            f = li.get(col)
            if f is None:
                continue
            for src, dst in ((left, li), (right, ri)):
                for j, v in src.items():
                    t = dst.get(j)
                    d = -(f * v)
                    t = d if t is None else t + d
                    if t:
                        dst[j] = t
                    else:
                        dst.pop(j, None)
    # row i of the inverse is aug[i][1]; convert back to columns
    out: list[SparseRow] = [dict() for _ in range(n)]
    for i, (_, right) in enumerate(aug):
        for j, v in right.items():
            out[j][i] = v
    return out
