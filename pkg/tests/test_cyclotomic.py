from __future__ import annotations

import cmath
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from taft_bicross.cyclotomic import (
    CycScalar,
    common_order,
    cyclotomic_polynomial,
    field_arith,
    multiplicative_order,
    rational,
    root_of_unity,
    roots_of_unity_group,
)

from conftest import close, to_complex


def numeric_cyclotomic(N: int) -> tuple[int, ...]:
    """prod (x - w) over primitive N-th roots w, expanded numerically and rounded."""
    poly = [1 + 0j]
    for k in range(1, N + 1):
        if gcd(k, N) != 1:
            continue
        w = cmath.exp(2j * cmath.pi * k / N)
        nxt = [0j] * (len(poly) + 1)
        for i, a in enumerate(poly):
            nxt[i + 1] += a
            nxt[i] -= a * w
        poly = nxt
    return tuple(int(round(a.real)) for a in poly)


@pytest.mark.parametrize("N", range(1, 25))
def test_cyclotomic_polynomial_matches_numeric_product(N):
    assert cyclotomic_polynomial(N) == numeric_cyclotomic(N)


def test_cyclotomic_polynomial_small_cases():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    # frozen from numeric_cyclotomic(6)
    assert cyclotomic_polynomial(6) == (1, -1, 1)


@pytest.mark.parametrize("N", range(1, 25))
def test_cyclotomic_polynomial_vanishes_at_its_root(N):
    z = root_of_unity(N, 1)
    acc = CycScalar.zero(N)
    for k, a in enumerate(cyclotomic_polynomial(N)):
        acc = field_arith("add", acc, field_arith("multiply", rational(a, N), z ** k))
    assert acc.is_zero()


def test_root_of_unity_examples():
    assert root_of_unity(2, 1) == rational(-1, 2)
    assert root_of_unity(4, 2) == rational(-1, 4)
    assert root_of_unity(3, 1) + root_of_unity(3, 2) == rational(-1, 3)


@pytest.mark.parametrize("L", [1, 2, 3, 4, 5, 6, 8, 12])
def test_roots_of_unity_have_order_dividing_L(L):
    for k in range(L):
        assert root_of_unity(L, k) ** L == CycScalar.one(L)


def test_field_arith_examples(z3):
    for L, k in [(3, 1), (4, 3), (6, 5), (12, 7)]:
        assert field_arith("invert", root_of_unity(L, k)) == root_of_unity(L, L - k)
    one = CycScalar.one(3)
    assert field_arith("multiply", one + z3, one + z3 ** 2) == one
    assert field_arith("multiply", z3, CycScalar.zero(3)).is_zero()
    assert field_arith("negate", z3) + z3 == CycScalar.zero(3)
    with pytest.raises(ZeroDivisionError):
        field_arith("invert", CycScalar.zero(5))


def test_multiplicative_order_examples():
    assert multiplicative_order(rational(-1)) == 2
    assert multiplicative_order(root_of_unity(6, 1)) == 6
    assert multiplicative_order(rational(2)) is None
    assert multiplicative_order(root_of_unity(12, 8)) == 3
    with pytest.raises((ValueError, ZeroDivisionError)):
        multiplicative_order(CycScalar.zero(3))


def test_roots_of_unity_group_examples():
    assert roots_of_unity_group(2, 2) == [rational(1, 2), rational(-1, 2)]
    assert roots_of_unity_group(3, 3) == [CycScalar.one(3), root_of_unity(3, 1), root_of_unity(3, 2)]
    assert roots_of_unity_group(1, 6) == [CycScalar.one(6)]
    with pytest.raises(ValueError):
        roots_of_unity_group(4, 6)


def test_mixed_orders_embed_into_lcm():
    a, b = root_of_unity(2, 1), root_of_unity(3, 1)
    c = a * b
    assert c.order == common_order(2, 3) == 6
    assert c == root_of_unity(6, 5)
    assert close(to_complex(c), to_complex(a) * to_complex(b))


def test_json_round_trip_and_repr():
    c = CycScalar(6, [Fraction(1, 2), -3])
    assert CycScalar.from_json(c.to_json()) == c
    assert c.to_json()["order"] == 6
    assert all(isinstance(s, str) for pair in c.to_json()["coeffs"] for s in pair)
    assert repr(CycScalar.one(3) + root_of_unity(3, 1)) == "1 + z3"


def test_canonical_form_is_reduced():
    # 1 + z + z^2 reduces to zero in Q(z3)
    assert CycScalar(3, [1, 1, 1]).is_zero()
    assert len(CycScalar(12, [0, 0, 0, 0, 1]).coeffs) == 4


orders = st.sampled_from([1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12])
small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def scalars(draw, order=None):
    L = draw(orders) if order is None else order
    n = draw(st.integers(min_value=0, max_value=L))
    return CycScalar(L, [draw(small) for _ in range(n)])


@st.composite
def same_field_triples(draw):
    L = draw(orders)
    return draw(scalars(L)), draw(scalars(L)), draw(scalars(L))


@settings(max_examples=150, deadline=None)
@given(same_field_triples())
def test_ring_operations_agree_with_complex_embedding(t):
    a, b, c = t
    za, zb, zc = map(to_complex, t)
    assert close(to_complex(a + b), za + zb)
    assert close(to_complex(a * b), za * zb)
    assert close(to_complex(a - c), za - zc)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a == b) == close(za, zb)


@settings(max_examples=150, deadline=None)
@given(scalars())
def test_inverse(a):
    if a.is_zero():
        return
    assert a * a.inverse() == CycScalar.one(a.order)
    assert close(to_complex(a.inverse()), 1 / to_complex(a), 1e-7)


@settings(max_examples=80, deadline=None)
@given(scalars(), scalars())
def test_cross_order_arithmetic(a, b):
    assert close(to_complex(a * b), to_complex(a) * to_complex(b))
    assert close(to_complex(a + b), to_complex(a) + to_complex(b))
