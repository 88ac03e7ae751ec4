"""Matched pairs between two Taft algebras.

The A side is T_{n^2}(qbar) with generators H, X; the H side is T_{m^2}(q)
with generators h, x.  Actions are given on generators and extended to all
basis monomials:

* ``g |> a`` peels the leftmost letter of ``a`` with the compatibility
  g |> (b a') = (g1 |> b1)((g2 <| b2) |> a') and applies the letters of ``g``
  right to left (left module axiom).
* ``g <| a`` peels the last letter of ``g`` with
  (g' c) <| b = (g' <| (c1 |> b1))(c2 <| b2) and applies the letters of ``a``
  left to right (right module axiom).

Both recursions only shorten words, so they terminate, and results are memoized.
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Any, Iterable, Sequence

from .cyclotomic import CycScalar, common_order, multiplicative_order, rational, roots_of_unity_group
from .hopf import AxiomReport, HopfStructure, vadd, vsub
from .taft import TaftDescriptor, TaftElement, taft_structure

SIGMA = "sigma"
ALPHA = "alpha"
DEFAULT_ALPHA_SAMPLES = (1, -1, 2, "1/2")


@dataclass
class ActionPair:
    """Two Hopf structures with fully tabulated actions.

    ``left[g][a]`` is the vector g |> a in A and ``right[g][a]`` the vector
    g <| a in H, for basis indices g of H and a of A.
    """

    A: HopfStructure
    H: HopfStructure
    left: list
    right: list
    name: str = ""


class _ActionEngine:
    """Memoized extension of generator-level action tables to all monomials."""

    def __init__(self, A: TaftDescriptor, Hd: TaftDescriptor, left_gen: dict, right_gen: dict):
        self.A, self.Hd = A, Hd
        self.TA, self.TH = taft_structure(A), taft_structure(Hd)
        self.one = CycScalar.one(A.order)
        a_H, a_X = A.index(1, 0), A.index(0, 1)
        h_h, h_x = Hd.index(1, 0), Hd.index(0, 1)
        self.a_gens = (a_H, a_X)
        self.h_gens = (h_h, h_x)
        # generator tables keyed by basis index, padded with the unit rows
        self._lg = {(h_h, a_H): left_gen["h", "H"], (h_h, a_X): left_gen["h", "X"],
                    (h_x, a_H): left_gen["x", "H"], (h_x, a_X): left_gen["x", "X"]}
        self._rg = {(h_h, a_H): right_gen["h", "H"], (h_h, a_X): right_gen["h", "X"],
                    (h_x, a_H): right_gen["x", "H"], (h_x, a_X): right_gen["x", "X"]}
        self._left: dict = {}
        self._right: dict = {}
        self._left_g: dict = {}
        self._right_g: dict = {}
        self._lock = threading.Lock()

    # generator-level lookups including the unit
    def gen_left(self, c: int, b: int) -> dict:
        if c == 0:
            return {b: self.one}
        if b == 0:
            return {0: self.one} if self.TH.counit[c] else {}
        return self._lg[c, b]

    def gen_right(self, c: int, b: int) -> dict:
        if b == 0:
            return {c: self.one}
        if c == 0:
            return {0: self.one} if self.TA.counit[b] else {}
        return self._rg[c, b]

    def _split_h_last(self, g: int) -> tuple[int, int]:
        k, l = divmod(g, self.Hd.m)
        if l:
            return self.Hd.index(k, l - 1), self.h_gens[1]
        return self.Hd.index(k - 1, 0), self.h_gens[0]

    def _split_a_first(self, a: int) -> tuple[int, int]:
        i, j = divmod(a, self.A.m)
        if i:
            return self.a_gens[0], self.A.index(i - 1, j)
        return self.a_gens[1], self.A.index(0, j - 1)

    def _split_a_last(self, a: int) -> tuple[int, int]:
        i, j = divmod(a, self.A.m)
        if j:
            return self.A.index(i, j - 1), self.a_gens[1]
        return self.A.index(i - 1, 0), self.a_gens[0]

    # g |> a
    def left(self, g: int, a: int) -> dict:
        key = (g, a)
        r = self._left.get(key)
        if r is not None:
            return r
        if g == 0:
            r = {a: self.one}
        elif a == 0:
            r = {0: self.one} if self.TH.counit[g] else {}
        elif g in self.h_gens:
            r = self._left_letter(g, a)
        else:
            rest, c = self._split_h_last(g)
            r = {}
            for t, x in self._left_letter(c, a).items():
                for u, y in self.left(rest, t).items():
                    vadd(r, u, x * y)
        with self._lock:
            self._left.setdefault(key, r)
        return r

    def _left_letter(self, c: int, a: int) -> dict:
        key = (c, a)
        r = self._left_g.get(key)
        if r is not None:
            return r
        if a == 0 or a in self.a_gens:
            r = self.gen_left(c, a)
        else:
            b, rest = self._split_a_first(a)
            r = {}
            TA = self.TA
            for c1, c2, k1 in self.TH.comult[c]:
                for b1, b2, k2 in self.TA.comult[b]:
                    u = self.gen_left(c1, b1)
                    if not u:
                        continue
                    w = self.gen_right(c2, b2)
                    acted: dict = {}
                    for t, cw in w.items():
                        for s, cv in self.left(t, rest).items():
                            vadd(acted, s, cw * cv)
                    if not acted:
                        continue
                    k = k1 * k2
                    for s, cs in TA.mul(u, acted).items():
                        vadd(r, s, k * cs)
        with self._lock:
            self._left_g.setdefault(key, r)
        return r

    # g <| a
    def right(self, g: int, a: int) -> dict:
        key = (g, a)
        r = self._right.get(key)
        if r is not None:
            return r
        if a == 0:
            r = {g: self.one}
        elif g == 0:
            r = {0: self.one} if self.TA.counit[a] else {}
        elif a in self.a_gens:
            r = self._right_letter(g, a)
        else:
            rest, b = self._split_a_last(a)
            r = {}
            for t, x in self.right(g, rest).items():
                for u, y in self._right_letter(t, b).items():
                    vadd(r, u, x * y)
        with self._lock:
            self._right.setdefault(key, r)
        return r

    def _right_letter(self, g: int, b: int) -> dict:
        key = (g, b)
        r = self._right_g.get(key)
        if r is not None:
            return r
        if g == 0 or g in self.h_gens:
            r = self.gen_right(g, b)
        else:
            rest, c = self._split_h_last(g)
            r = {}
            TH = self.TH
            for c1, c2, k1 in self.TH.comult[c]:
                for b1, b2, k2 in self.TA.comult[b]:
                    w = self.gen_right(c2, b2)
                    if not w:
                        continue
                    u = self.gen_left(c1, b1)
                    inner: dict = {}
                    for t, cu in u.items():
                        for s, cv in self.right(rest, t).items():
                            vadd(inner, s, cu * cv)
                    if not inner:
                        continue
                    k = k1 * k2
                    for s, cs in TH.mul(inner, w).items():
                        vadd(r, s, k * cs)
        with self._lock:
            self._right_g.setdefault(key, r)
        return r


@dataclass(eq=False)
class MatchedPair:
    """Generator tables for |> and <| between T_{n^2}(qbar) and T_{m^2}(q)."""

    A: TaftDescriptor
    Hside: TaftDescriptor
    left_table: dict
    right_table: dict
    family: str
    param: CycScalar
    _engine: Any = field(default=None, repr=False)
    _actions: Any = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return self.A.m

    @property
    def m(self) -> int:
        return self.Hside.m

    @property
    def qbar(self) -> CycScalar:
        return self.A.q

    @property
    def q(self) -> CycScalar:
        return self.Hside.q

    @property
    def order(self) -> int:
        return self.A.order

    @property
    def engine(self) -> _ActionEngine:
        if self._engine is None:
            lg = {k: v.to_vector() for k, v in self.left_table.items()}
            rg = {k: v.to_vector() for k, v in self.right_table.items()}
            self._engine = _ActionEngine(self.A, self.Hside, lg, rg)
        return self._engine

    def actions(self) -> ActionPair:
        if self._actions is None:
            eng = self.engine
            DA, DH = self.A.dim, self.Hside.dim
            left = [[eng.left(g, a) for a in range(DA)] for g in range(DH)]
            right = [[eng.right(g, a) for a in range(DA)] for g in range(DH)]
            self._actions = ActionPair(taft_structure(self.A), taft_structure(self.Hside), left, right,
                                       self.describe())
        return self._actions

    def describe(self) -> str:
        return f"{self.family}({self.param!r}) n={self.n} m={self.m}"

    def to_json(self) -> dict[str, Any]:
        def tab(t):
            return {f"{g}|{a}": t[g, a].to_json()["terms"] for g in "hx" for a in "HX"}

        return {
            "family": self.family,
            "n": self.n,
            "m": self.m,
            "qbar": self.qbar.to_json(),
            "q": self.q.to_json(),
            "param": self.param.to_json(),
            "tables": {"left": tab(self.left_table), "right": tab(self.right_table)},
        }


def _field_order(*xs) -> int:
    L = 1
    for x in xs:
        if isinstance(x, CycScalar):
            L = common_order(L, x.order)
    return L


def _as_scalar(x, L: int) -> CycScalar:
    if isinstance(x, CycScalar):
        return x.embed(common_order(x.order, L)) if x.order != L else x
    return rational(x, L)


def _descriptors(n: int, m: int, qbar: CycScalar, q: CycScalar, L: int) -> tuple[TaftDescriptor, TaftDescriptor]:
    if n < 2 or m < 2:
        raise ValueError("n and m must be at least 2")
    qb, qq = _as_scalar(qbar, L), _as_scalar(q, L)
    if multiplicative_order(qb) != n:
        raise ValueError(f"qbar = {qbar!r} is not a primitive {n}-th root of unity")
    if multiplicative_order(qq) != m:
        raise ValueError(f"q = {q!r} is not a primitive {m}-th root of unity")
    return TaftDescriptor(n, qb, ("H", "X")), TaftDescriptor(m, qq, ("h", "x"))


def _tables(A: TaftDescriptor, Hd: TaftDescriptor, lt: dict, rt: dict) -> tuple[dict, dict]:
    left = {k: TaftElement(A, v) for k, v in lt.items()}
    right = {k: TaftElement(Hd, v) for k, v in rt.items()}
    return left, right


def family_sigma(n: int, m: int, qbar: CycScalar, q: CycScalar, sigma) -> MatchedPair:
    """Matched pair with h |> X = sigma X, x <| H = sigma x and everything else trivial."""
    L = _field_order(qbar, q, sigma)
    A, Hd = _descriptors(n, m, qbar, q, L)
    s = _as_scalar(sigma, L)
    d = gcd(m, n)
    if not s or s ** d != 1:
        raise ValueError(f"sigma = {sigma!r} is not a {d}-th root of unity")
    one = CycScalar.one(L)
    left, right = _tables(
        A, Hd,
        {("h", "H"): {(1, 0): one}, ("h", "X"): {(0, 1): s}, ("x", "H"): {}, ("x", "X"): {}},
        {("h", "H"): {(1, 0): one}, ("h", "X"): {}, ("x", "H"): {(0, 1): s}, ("x", "X"): {}},
    )
    return MatchedPair(A, Hd, left, right, SIGMA, s)


def family_alpha(n: int, q: CycScalar, alpha) -> MatchedPair:
    """Matched pair with qbar = q^{n-1}, x <| X = alpha(1 - h) and x |> X = alpha(1 - H)."""
    L = _field_order(q, alpha)
    qq = _as_scalar(q, L)
    a = _as_scalar(alpha, L)
    if not a:
        raise ValueError("alpha = 0 gives the sigma family with sigma = 1; use family_sigma")
    A, Hd = _descriptors(n, n, qq ** (n - 1), qq, L)
    one = CycScalar.one(L)
    left, right = _tables(
        A, Hd,
        {("h", "H"): {(1, 0): one}, ("h", "X"): {(0, 1): qq}, ("x", "H"): {},
         ("x", "X"): {(0, 0): a, (1, 0): -a}},
        {("h", "H"): {(1, 0): one}, ("h", "X"): {}, ("x", "H"): {(0, 1): qq},
         ("x", "X"): {(0, 0): a, (1, 0): -a}},
    )
    return MatchedPair(A, Hd, left, right, ALPHA, a)


def act_left(mp: MatchedPair, g: tuple[int, int], a: TaftElement) -> TaftElement:
    """g |> a for a monomial g = h^k x^l of the H side."""
    eng = mp.engine
    gi = mp.Hside.index(*g)
    out: dict = {}
    for r, c in a.to_vector().items():
        for s, v in eng.left(gi, r).items():
            vadd(out, s, c * v)
    return TaftElement.from_vector(mp.A, out)


def act_right(mp: MatchedPair, g: TaftElement, a: tuple[int, int]) -> TaftElement:
    """g <| a for a monomial a = H^i X^j of the A side."""
    eng = mp.engine
    ai = mp.A.index(*a)
    out: dict = {}
    for r, c in g.to_vector().items():
        for s, v in eng.right(r, ai).items():
            vadd(out, s, c * v)
    return TaftElement.from_vector(mp.Hside, out)


# -- verification ---------------------------------------------------------------------


def _tensor_eq(x: dict, y: dict) -> bool:
    return x == y


def verify_matched_pair(mp: MatchedPair | ActionPair) -> AxiomReport:
    """Exhaustive check of the matched-pair axioms on all basis elements.

    Covers unit and module axioms for both actions, the coalgebra-map and
    counit conditions for both actions, and the four compatibilities
    (unit, left-product, right-product, twist).
    """
    ap = mp.actions() if isinstance(mp, MatchedPair) else mp
    A, H = ap.A, ap.H
    L, R = ap.left, ap.right
    DA, DH = A.dim, H.dim
    rep = AxiomReport(ap.name)
    one = A.one()

    def lact(gv: dict, av: dict) -> dict:
        out: dict = {}
        for g, x in gv.items():
            row = L[g]
            for a, y in av.items():
                xy = x * y
                for t, z in row[a].items():
                    vadd(out, t, xy * z)
        return out

    def ract(gv: dict, av: dict) -> dict:
        out: dict = {}
        for g, x in gv.items():
            row = R[g]
            for a, y in av.items():
                xy = x * y
                for t, z in row[a].items():
                    vadd(out, t, xy * z)
        return out

    unitA, unitH = A.unit_vec(), H.unit_vec()
    for a in range(DA):
        rep.count("unit-action")
        got = lact(unitH, {a: one})
        if got != {a: one}:
            rep.fail("unit-action", ("1", A.basis[a]), vsub(got, {a: one}))
        rep.count("mp1")
        got = ract(unitH, {a: one})
        want = {k: v * A.counit[a] for k, v in unitH.items()} if A.counit[a] else {}
        if got != want:
            rep.fail("mp1", ("1", A.basis[a]), vsub(got, want))
    for g in range(DH):
        rep.count("unit-action")
        got = ract({g: one}, unitA)
        if got != {g: one}:
            rep.fail("unit-action", (H.basis[g], "1"), vsub(got, {g: one}))
        rep.count("mp1")
        got = lact({g: one}, unitA)
        want = {k: v * H.counit[g] for k, v in unitA.items()} if H.counit[g] else {}
        if got != want:
            rep.fail("mp1", (H.basis[g], "1"), vsub(got, want))

    # module axioms
    for g in range(DH):
        for g2 in range(DH):
            gg = dict(H.mult[g][g2])
            for a in range(DA):
                rep.count("left-module")
                lhs = lact(gg, {a: one})
                rhs = lact({g: one}, L[g2][a])
                if lhs != rhs:
                    rep.fail("left-module", (H.basis[g], H.basis[g2], A.basis[a]), vsub(lhs, rhs))
    for g in range(DH):
        for a in range(DA):
            for a2 in range(DA):
                rep.count("right-module")
                lhs = ract({g: one}, dict(A.mult[a][a2]))
                rhs = ract(R[g][a], {a2: one})
                if lhs != rhs:
                    rep.fail("right-module", (H.basis[g], A.basis[a], A.basis[a2]), vsub(lhs, rhs))

    # coalgebra maps, counit conditions, twist compatibility
    for g in range(DH):
        dg = H.comult[g]
        for a in range(DA):
            da = A.comult[a]
            ea = H.counit[g] * A.counit[a]
            rep.count("comult-right-action")
            lhs = H.comul(R[g][a])
            rhs: dict = {}
            for g1, g2, x in dg:
                for a1, a2, y in da:
                    xy = x * y
                    for s, u in R[g1][a1].items():
                        for t, w in R[g2][a2].items():
                            vadd(rhs, (s, t), xy * u * w)
            if lhs != rhs:
                rep.fail("comult-right-action", (H.basis[g], A.basis[a]), vsub(lhs, rhs))
            rep.count("comult-left-action")
            lhs = A.comul(L[g][a])
            rhs = {}
            for g1, g2, x in dg:
                for a1, a2, y in da:
                    xy = x * y
                    for s, u in L[g1][a1].items():
                        for t, w in L[g2][a2].items():
                            vadd(rhs, (s, t), xy * u * w)
            if lhs != rhs:
                rep.fail("comult-left-action", (H.basis[g], A.basis[a]), vsub(lhs, rhs))
            rep.count("counit-actions", 2)
            e1 = H.eps(R[g][a])
            if e1 != ea:
                rep.fail("counit-actions", ("right", H.basis[g], A.basis[a]), e1 - ea)
            e2 = A.eps(L[g][a])
            if e2 != ea:
                rep.fail("counit-actions", ("left", H.basis[g], A.basis[a]), e2 - ea)
            # g1 <| a1 (x) g2 |> a2 = g2 <| a2 (x) g1 |> a1
            rep.count("mp4")
            lhs, rhs = {}, {}
            for g1, g2, x in dg:
                for a1, a2, y in da:
                    xy = x * y
                    for s, u in R[g1][a1].items():
                        for t, w in L[g2][a2].items():
                            vadd(lhs, (s, t), xy * u * w)
                    for s, u in R[g2][a2].items():
                        for t, w in L[g1][a1].items():
                            vadd(rhs, (s, t), xy * u * w)
            if lhs != rhs:
                rep.fail("mp4", (H.basis[g], A.basis[a]), vsub(lhs, rhs))

    # g |> (ab) = (g1 |> a1)((g2 <| a2) |> b)
    for g in range(DH):
        dg = H.comult[g]
        for a in range(DA):
            da = A.comult[a]
            pieces = []
            for g1, g2, x in dg:
                for a1, a2, y in da:
                    pieces.append((x * y, L[g1][a1], R[g2][a2]))
            for b in range(DA):
                rep.count("mp2")
                lhs = lact({g: one}, dict(A.mult[a][b]))
                rhs = {}
                for k, u, w in pieces:
                    if not u or not w:
                        continue
                    acted = lact(w, {b: one})
                    for t, c in A.mul(u, acted).items():
                        vadd(rhs, t, k * c)
                if lhs != rhs:
                    rep.fail("mp2", (H.basis[g], A.basis[a], A.basis[b]), vsub(lhs, rhs))

    # (g h) <| a = (g <| (h1 |> a1))(h2 <| a2)
    for h in range(DH):
        dh = H.comult[h]
        for a in range(DA):
            da = A.comult[a]
            pieces = []
            for h1, h2, x in dh:
                for a1, a2, y in da:
                    pieces.append((x * y, L[h1][a1], R[h2][a2]))
            for g in range(DH):
                rep.count("mp3")
                lhs = ract(dict(H.mult[g][h]), {a: one})
                rhs = {}
                for k, u, w in pieces:
                    if not u or not w:
                        continue
                    inner = ract({g: one}, u)
                    for t, c in H.mul(inner, w).items():
                        vadd(rhs, t, k * c)
                if lhs != rhs:
                    rep.fail("mp3", (H.basis[g], H.basis[h], A.basis[a]), vsub(lhs, rhs))
    return rep


# -- ansatz ------------------------------------------------------------------------------


@dataclass(frozen=True)
class AnsatzParams:
    """Unknowns of the generator-level ansatz.

    h |> X = a(1 - H) + bX, x |> X = alpha(1 - H) + beta X,
    x <| H = gamma(1 - h) + sigma x, x <| X = mu(1 - h).
    """

    a: Any = 0
    b: Any = 1
    alpha: Any = 0
    beta: Any = 0
    gamma: Any = 0
    sigma: Any = 1
    mu: Any = 0

    def scalars(self, L: int) -> dict[str, CycScalar]:
        return {k: _as_scalar(getattr(self, k), L) for k in ("a", "b", "alpha", "beta", "gamma", "sigma", "mu")}


RESIDUAL_NAMES = (
    "b^m - 1",
    "a(1 + b + ... + b^(m-1))",
    "q(alpha + a beta) - b alpha",
    "b beta (q - 1)",
    "sigma^n - 1",
    "mu (1 - qbar sigma)",
    "gamma (1 + sigma + ... + sigma^(n-1))",
    "gamma (q - 1)",
    "a (sigma - 1)",
    "mu (b - q)",
    "a (qbar - 1)",
    "alpha (1 - sigma qbar)",
    "b - sigma",
    "alpha - mu",
)


def _geom(x: CycScalar, k: int) -> CycScalar:
    acc = CycScalar.zero(x.order)
    p = CycScalar.one(x.order)
    for _ in range(k):
        acc = acc + p
        p = p * x
    return acc


def ansatz_residuals(n: int, m: int, qbar: CycScalar, q: CycScalar, p: AnsatzParams) -> list[CycScalar]:
    """The constraint system on the ansatz unknowns; every entry vanishes exactly on a matched pair."""
    L = _field_order(qbar, q, *(getattr(p, k) for k in ("a", "b", "alpha", "beta", "gamma", "sigma", "mu")))
    A, Hd = _descriptors(n, m, qbar, q, L)
    qb, qq = A.q, Hd.q
    s = p.scalars(L)
    a, b, al, be, ga, si, mu = (s[k] for k in ("a", "b", "alpha", "beta", "gamma", "sigma", "mu"))
    return [
        b ** m - 1,
        a * _geom(b, m),
        qq * (al + a * be) - b * al,
        b * be * (qq - 1),
        si ** n - 1,
        mu * (1 - qb * si),
        ga * _geom(si, n),
        ga * (qq - 1),
        a * (si - 1),
        mu * (b - qq),
        a * (qb - 1),
        al * (1 - si * qb),
        b - si,
        al - mu,
    ]


def ansatz_pair(n: int, m: int, qbar: CycScalar, q: CycScalar, p: AnsatzParams) -> MatchedPair:
    """Candidate action tables built from the ansatz (not necessarily a matched pair)."""
    L = _field_order(qbar, q, *(getattr(p, k) for k in ("a", "b", "alpha", "beta", "gamma", "sigma", "mu")))
    A, Hd = _descriptors(n, m, qbar, q, L)
    s = p.scalars(L)
    one = CycScalar.one(L)
    left, right = _tables(
        A, Hd,
        {("h", "H"): {(1, 0): one}, ("h", "X"): {(0, 0): s["a"], (1, 0): -s["a"], (0, 1): s["b"]},
         ("x", "H"): {}, ("x", "X"): {(0, 0): s["alpha"], (1, 0): -s["alpha"], (0, 1): s["beta"]}},
        {("h", "H"): {(1, 0): one}, ("h", "X"): {},
         ("x", "H"): {(0, 0): s["gamma"], (1, 0): -s["gamma"], (0, 1): s["sigma"]},
         ("x", "X"): {(0, 0): s["mu"], (1, 0): -s["mu"]}},
    )
    return MatchedPair(A, Hd, left, right, "ansatz", s["sigma"])


def off_family_perturbations(n: int, m: int, qbar: CycScalar, q: CycScalar, count: int = 10,
                             seed: int = 7) -> list[AnsatzParams]:
    """Deterministic ansatz points that sit off both families."""
    L = lcm(_field_order(qbar, q), gcd(m, n))
    rng = random.Random(seed)
    base_sigma = roots_of_unity_group(gcd(m, n), L)
    out: list[AnsatzParams] = []
    knobs = ("a", "b", "alpha", "beta", "gamma", "sigma", "mu")
    while len(out) < count:
        sig = base_sigma[rng.randrange(len(base_sigma))]
        params = {"a": 0, "b": sig, "alpha": 0, "beta": 0, "gamma": 0, "sigma": sig, "mu": 0}
        knob = knobs[len(out) % len(knobs)]
        bump = rational(rng.choice([1, 2, 3, -1, -2]) * rng.choice([1, 1, 1, 5]), L) / rng.choice([1, 2, 3])
        params[knob] = _as_scalar(params[knob], L) + bump
        out.append(AnsatzParams(**params))
    return out


def enumerate_matched_pairs(n: int, m: int, qbar: CycScalar, q: CycScalar,
                            alpha_samples: Sequence | None = None) -> list[MatchedPair]:
    """Every sigma pair for sigma in U_d, plus alpha pairs when m = n and qbar = q^{n-1}."""
    d = gcd(m, n)
    L = lcm(_field_order(qbar, q), d)
    A, Hd = _descriptors(n, m, qbar, q, L)
    pairs = [family_sigma(n, m, A.q, Hd.q, s) for s in roots_of_unity_group(d, L)]
    if m == n and A.q == Hd.q ** (n - 1):
        samples = DEFAULT_ALPHA_SAMPLES if alpha_samples is None else alpha_samples
        pairs += [family_alpha(n, Hd.q, al) for al in samples]
    return pairs


def closed_form_right(mp: MatchedPair, t: int) -> TaftElement:
    """alpha(1 + ... + q^{t-1}) x^{t-1} - alpha q^{t-1}(1 + ... + q^{t-1}) h x^{t-1} for x^t <| X."""
    q, al = mp.q, mp.param
    g = _geom(q, t)
    Hd = mp.Hside
    return TaftElement(Hd, {(0, t - 1): al * g, (1, t - 1): -al * q ** (t - 1) * g})


def iter_pairs(mp: MatchedPair) -> Iterable[tuple[int, int]]:
    for g in range(mp.Hside.dim):
        for a in range(mp.A.dim):
            yield g, a
