from __future__ import annotations

import pytest

from taft_bicross.cyclotomic import CycScalar, rational
from taft_bicross.hopf import (
    AxiomReport,
    HopfStructure,
    LinearMap,
    check_hopf_map,
    cop,
    dual,
    is_hopf_isomorphism,
    structures_equal,
    tensor_product,
    verify_hopf,
)
from taft_bicross.taft import TaftDescriptor, taft_structure


def sweedler():
    return taft_structure(TaftDescriptor(2, rational(-1, 2)))


def identity(hs: HopfStructure) -> LinearMap:
    return LinearMap(hs, hs, [{r: hs.one()} for r in range(hs.dim)], "id")


def test_derived_structures_are_hopf(z3):
    T = taft_structure(TaftDescriptor(3, z3))
    for hs in (cop(T), dual(T), tensor_product(sweedler(), sweedler())):
        assert verify_hopf(hs).passed, hs.name


def test_json_round_trip():
    T = sweedler()
    back = HopfStructure.from_json(T.to_json())
    assert structures_equal(T, back)


def test_structures_equal_dimension_mismatch(z3):
    with pytest.raises(ValueError):
        structures_equal(sweedler(), taft_structure(TaftDescriptor(3, z3)))


def test_corrupted_multiplication_is_detected():
    T = sweedler()
    doc = T.to_json()
    # x * x = 0 in the Sweedler algebra; claim x * x = 1 instead
    x = T.index[(0, 1)]
    doc["mult"].append([x, x, 0, rational(1, 2).to_json()])
    bad = HopfStructure.from_json(doc)
    rep = verify_hopf(bad)
    assert not rep.passed
    assert rep.failed_axioms()


def test_identity_is_isomorphism_and_zero_map_is_not():
    T = sweedler()
    assert is_hopf_isomorphism(identity(T))
    kill_x = LinearMap(T, T, [({r: T.one()} if j == 0 else {}) for r, (i, j) in enumerate(T.basis)], "kill")
    # projection onto the group algebra of h: a Hopf map, but rank deficient
    assert check_hopf_map(kill_x).passed
    assert not is_hopf_isomorphism(kill_x)
    swap_h = LinearMap(T, T, [{T.index[(0, j)]: T.one()} for (i, j) in T.basis], "drop-h")
    assert not check_hopf_map(swap_h).passed


def test_linear_map_compose_and_rank():
    T = sweedler()
    f = identity(T)
    g = f.compose(f)
    assert g.columns == f.columns
    assert f.matrix_rank() == T.dim
    with pytest.raises(ValueError):
        LinearMap(T, T, [{}], "short")


def test_axiom_report_bookkeeping():
    rep = AxiomReport("demo")
    rep.count("a", 3)
    assert rep.passed
    rep.fail("a", (1, 2), CycScalar.one(1))
    other = AxiomReport("other")
    other.count("b")
    rep.merge(other)
    doc = rep.to_json()
    assert doc["pass"] is False and doc["failure_count"] == 1
    assert doc["checks"] == {"a": 3, "b": 1}


def test_sampled_associativity_note(z3):
    T = taft_structure(TaftDescriptor(3, z3))
    rep = verify_hopf(T, triple_limit=4, triple_samples=50)
    assert rep.passed
    assert any("sampled" in n for n in rep.notes)


def test_antipode_inverse_of_taft(z3):
    T = taft_structure(TaftDescriptor(3, z3))
    inv = T.antipode_inverse()
    for r in range(T.dim):
        assert T.S(inv[r]) == {r: T.one()}
