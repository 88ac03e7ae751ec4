from __future__ import annotations

import random
from fractions import Fraction

import pytest

from taft_bicross.cyclotomic import CycScalar, rational, root_of_unity
from taft_bicross.linalg import bareiss_rank, columns_to_rows, inverse_columns


def fraction_rank(rows: list[list[Fraction]]) -> int:
    """Plain Gauss-Jordan over Q."""
    m = [list(r) for r in rows]
    rank, col = 0, 0
    n_cols = len(m[0]) if m else 0
    while rank < len(m) and col < n_cols:
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def as_sparse(rows, order=1):
    return [{j: rational(x, order) for j, x in enumerate(r) if x} for r in rows]


@pytest.mark.parametrize("seed", range(12))
def test_rank_matches_rational_oracle(seed):
    rng = random.Random(seed)
    n, k = rng.randint(1, 7), rng.randint(1, 7)
    r = rng.randint(1, min(n, k))
    left = [[Fraction(rng.randint(-3, 3)) for _ in range(r)] for _ in range(n)]
    right = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(k)] for _ in range(r)]
    rows = [[sum(left[i][t] * right[t][j] for t in range(r)) for j in range(k)] for i in range(n)]
    assert bareiss_rank(as_sparse(rows), k) == fraction_rank(rows)


def test_rank_over_cyclotomic_field():
    z = root_of_unity(3, 1)
    one = CycScalar.one(3)
    # rows (1, z) and (z, z^2) are dependent; (1, 1) is not
    assert bareiss_rank([{0: one, 1: z}, {0: z, 1: z * z}], 2) == 1
    assert bareiss_rank([{0: one, 1: z}, {0: one, 1: one}], 2) == 2
    assert bareiss_rank([], 3) == 0


def test_inverse_columns_round_trip():
    z = root_of_unity(4, 1)
    one = CycScalar.one(4)
    cols = [{0: one, 1: z}, {1: one, 2: z * 2}, {0: z, 2: one}]
    inv = inverse_columns(cols, 4)
    for j in range(3):
        acc: dict = {}
        for k, c in inv[j].items():
            for i, v in cols[k].items():
                acc[i] = acc.get(i, CycScalar.zero(4)) + c * v
        assert {i: v for i, v in acc.items() if v} == {j: one}
    assert len(columns_to_rows(cols)) == 3


def test_singular_inverse_raises():
    one = CycScalar.one(1)
    with pytest.raises(ValueError):
        inverse_columns([{0: one}, {0: one}], 1)
