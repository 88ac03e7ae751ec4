from __future__ import annotations

import pytest

from taft_bicross.cyclotomic import CycScalar, rational, root_of_unity
from taft_bicross.matched_pair import (
    RESIDUAL_NAMES,
    AnsatzParams,
    act_left,
    act_right,
    ansatz_pair,
    ansatz_residuals,
    closed_form_right,
    enumerate_matched_pairs,
    family_alpha,
    family_sigma,
    off_family_perturbations,
    verify_matched_pair,
)
from taft_bicross.taft import TaftElement

Z3 = root_of_unity(3, 1)
Z4 = root_of_unity(4, 1)
Z6 = root_of_unity(6, 1)


def gen_tables(mp):
    return ({k: v.coeffs for k, v in mp.left_table.items()},
            {k: v.coeffs for k, v in mp.right_table.items()})


def test_family_sigma_tables():
    s = Z3
    mp = family_sigma(3, 3, Z3, Z3, s)
    one = CycScalar.one(3)
    left, right = gen_tables(mp)
    assert left == {("h", "H"): {(1, 0): one}, ("h", "X"): {(0, 1): s}, ("x", "H"): {}, ("x", "X"): {}}
    assert right == {("h", "H"): {(1, 0): one}, ("h", "X"): {}, ("x", "H"): {(0, 1): s}, ("x", "X"): {}}
    trivial = family_sigma(3, 3, Z3, Z3, 1)
    left, right = gen_tables(trivial)
    assert left[("h", "X")] == {(0, 1): one} and right[("x", "H")] == {(0, 1): one}


def test_family_sigma_rejects_bad_sigma():
    with pytest.raises(ValueError):
        family_sigma(2, 3, -1, Z3, -1)  # d = 1
    with pytest.raises(ValueError):
        family_sigma(3, 3, Z3, Z3, 2)


def test_family_alpha_tables():
    q = Z3
    mp = family_alpha(3, q, 1)
    one = CycScalar.one(3)
    left, right = gen_tables(mp)
    assert mp.qbar == q ** 2
    assert left[("h", "X")] == {(0, 1): q}
    assert left[("x", "X")] == {(0, 0): one, (1, 0): -one}
    assert left[("x", "H")] == {}
    assert right[("x", "H")] == {(0, 1): q}
    assert right[("x", "X")] == {(0, 0): one, (1, 0): -one}
    with pytest.raises(ValueError):
        family_alpha(3, q, 0)
    assert verify_matched_pair(family_alpha(2, -1, -1)).passed


def left_power_oracle(mp, t: int) -> TaftElement:
    """x |> X^t via the recurrence obtained from mp2 with a = X, b = X^(t-1):

    f_t = alpha q^(t-1) (1 - H) X^(t-1) + q X f_(t-1) + alpha (1 - q^(t-1)) X^(t-1).
    """
    A = mp.A
    q, al = mp.q, mp.param
    X = TaftElement.gen_skew(A)
    one = TaftElement.one(A)
    H = TaftElement.gen_group(A)
    f = TaftElement(A, {})
    for s in range(1, t + 1):
        Xp = X ** (s - 1)
        f = ((one - H) * Xp).scale(al * q ** (s - 1)) + (X * f).scale(q) + Xp.scale(al * (1 - q ** (s - 1)))
    return f


@pytest.mark.parametrize("n,q,alpha", [(2, -1, 1), (3, Z3, 2), (3, Z3 ** 2, "1/2"), (4, Z4, -1)])
def test_left_action_on_powers(n, q, alpha):
    mp = family_alpha(n, q, alpha)
    A = mp.A
    for t in range(1, n + 1):
        got = act_left(mp, (0, 1), TaftElement.monomial(A, 0, t))
        assert got == left_power_oracle(mp, t)
    assert act_left(mp, (0, 1), TaftElement.monomial(A, 0, n)).is_zero()


@pytest.mark.parametrize("n,q,alpha", [(3, Z3, 2), (4, Z4, -1), (6, Z6, 1)])
def test_left_action_closed_form(n, q, alpha):
    # frozen from left_power_oracle: x |> X^t = alpha [t]_q (X^(t-1) - H X^(t-1))
    mp = family_alpha(n, q, alpha)
    A = mp.A
    for t in range(1, n):
        g = sum((mp.q ** k for k in range(t)), CycScalar.zero(mp.order))
        want = TaftElement(A, {(0, t - 1): mp.param * g, (1, t - 1): -mp.param * g})
        assert left_power_oracle(mp, t) == want


def test_left_action_x_on_x_squared_by_hand():
    mp = family_alpha(3, Z3, 1)
    A = mp.A
    one = CycScalar.one(3)
    got = act_left(mp, (0, 1), TaftElement.monomial(A, 0, 2))
    assert got.coeffs == {(0, 1): one + Z3, (1, 1): -(one + Z3)}


@pytest.mark.parametrize("n,q,alpha", [(2, -1, 1), (3, Z3, 2), (4, Z4, -1)])
def test_right_action_on_powers(n, q, alpha):
    mp = family_alpha(n, q, alpha)
    Hs = mp.Hside
    for t in range(1, n + 1):
        got = act_right(mp, TaftElement.monomial(Hs, 0, t), (0, 1))
        want = closed_form_right(mp, t) if t < n else TaftElement(Hs, {})
        assert got == want
    assert closed_form_right(mp, n).is_zero()


def test_unit_actions():
    mp = family_alpha(3, Z3, 2)
    A, Hs = mp.A, mp.Hside
    for i, j in A.basis():
        a = TaftElement.monomial(A, i, j)
        assert act_left(mp, (0, 0), a) == a
        assert act_right(mp, TaftElement.one(Hs), (i, j)) == TaftElement.one(Hs).scale(1 if j == 0 else 0)
    for k, l in Hs.basis():
        g = TaftElement.monomial(Hs, k, l)
        assert act_right(mp, g, (0, 0)) == g
    mp = family_sigma(3, 3, Z3, Z3, Z3)
    assert act_right(mp, TaftElement.gen_skew(mp.Hside), (1, 0)) == TaftElement.gen_skew(mp.Hside).scale(Z3)


@pytest.mark.parametrize("sigma", [1, Z3, Z3 ** 2])
def test_sigma_family_verifies(sigma):
    rep = verify_matched_pair(family_sigma(3, 3, Z3, Z3, sigma))
    assert rep.passed
    assert {"mp1", "mp2", "mp3", "mp4", "left-module", "right-module"} <= set(rep.checks)


def test_tampered_table_fails():
    # x <| X = 1 - h on a sigma pair with sigma != q
    bad = ansatz_pair(3, 3, Z3, Z3, AnsatzParams(b=1, sigma=1, mu=1))
    rep = verify_matched_pair(bad)
    assert not rep.passed


@pytest.mark.parametrize("n,m,qbar,q", [(2, 2, -1, -1), (2, 4, -1, Z4), (3, 3, Z3, Z3), (3, 3, Z3 ** 2, Z3), (3, 2, Z3, -1)])
def test_ansatz_vanishes_on_families(n, m, qbar, q):
    for mp in enumerate_matched_pairs(n, m, qbar, q):
        s = mp.param
        if mp.family == "sigma":
            p = AnsatzParams(b=s, sigma=s)
        else:
            p = AnsatzParams(b=mp.q, sigma=mp.q, alpha=s, mu=s)
        res = ansatz_residuals(n, m, qbar, q, p)
        assert len(res) == len(RESIDUAL_NAMES)
        assert all(r.is_zero() for r in res)


def test_ansatz_alpha_off_family():
    # alpha != 0 needs qbar = q^(n-1); here qbar = q
    res = ansatz_residuals(3, 3, Z3, Z3, AnsatzParams(b=Z3, sigma=Z3, alpha=1, mu=1))
    assert any(not r.is_zero() for r in res)


@pytest.mark.parametrize("n,m,qbar,q", [(2, 2, -1, -1), (3, 3, Z3, Z3), (2, 4, -1, Z4)])
def test_perturbations_are_rejected(n, m, qbar, q):
    perts = off_family_perturbations(n, m, qbar, q, count=10)
    assert len(perts) >= 10
    for p in perts:
        assert any(not r.is_zero() for r in ansatz_residuals(n, m, qbar, q, p))
        assert not verify_matched_pair(ansatz_pair(n, m, qbar, q, p)).passed


def test_enumeration_sizes():
    assert len(enumerate_matched_pairs(3, 2, Z3, -1)) == 1
    pairs = enumerate_matched_pairs(2, 2, -1, -1)
    assert [p.family for p in pairs] == ["sigma", "sigma", "alpha", "alpha", "alpha", "alpha"]
    assert len(enumerate_matched_pairs(2, 2, -1, -1, alpha_samples=[1])) == 3
    assert len(enumerate_matched_pairs(3, 3, Z3, Z3)) == 3
    assert len(enumerate_matched_pairs(3, 3, Z3 ** 2, Z3)) == 3 + 4
    assert len(enumerate_matched_pairs(4, 6, Z4, Z6)) == 2


def test_matched_pair_json():
    doc = family_alpha(2, -1, 2).to_json()
    assert doc["family"] == "alpha" and doc["n"] == doc["m"] == 2
    assert set(doc["tables"]["left"]) == {"h|H", "h|X", "x|H", "x|X"}
    assert doc["param"] == rational(2, doc["param"]["order"]).to_json()
