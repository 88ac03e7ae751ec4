"""Hopf morphisms between bicrossed products via quadruples (u, p, r, v).

A quadruple consists of unital coalgebra maps u: A -> A', p: A -> H',
r: H -> A', v: H -> H'.  It defines a morphism A |x| H -> A' |x| H' exactly when
the eight compatibility conditions C1..C8 hold; ``check_quadruple`` evaluates
them on every basis element and pair, and ``is_hopf_iso`` checks the resulting
linear map directly, so the two can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Any, Mapping, Sequence

from .bicrossed import PresentationParams, bicrossed_map, presentation, qalpha, tsigma
from .cyclotomic import CycScalar, rational, roots_of_unity_group
from .hopf import AxiomReport, HopfStructure, LinearMap, check_hopf_map, is_hopf_isomorphism, vadd, vsub
from .matched_pair import ActionPair, MatchedPair, _as_scalar, _field_order
from .taft import TaftDescriptor, taft_structure

__all__ = [
    "Instance", "Quadruple", "QuadrupleFamily", "ClassReport", "IsoResult",
    "instance", "quadruple_from_family", "quadruple_to_morphism", "check_quadruple",
    "is_hopf_iso", "iso_search", "classify", "formula_count", "automorphisms",
    "algebra_map", "shape_residuals", "falsification_grid", "phi_alpha", "double_witness",
    "representatives", "psi_map", "swap_map", "SHAPES",
]


# -- instances -------------------------------------------------------------------------------


@dataclass(eq=False)
class Instance:
    """A presented bicrossed product together with its matched pair and action tables."""

    params: PresentationParams
    mp: MatchedPair
    _structure: HopfStructure | None = None

    @property
    def actions(self) -> ActionPair:
        return self.mp.actions()

    @property
    def structure(self) -> HopfStructure:
        if self._structure is None:
            self._structure = presentation(self.params)
        return self._structure

    @property
    def A(self) -> HopfStructure:
        return self.actions.A

    @property
    def H(self) -> HopfStructure:
        return self.actions.H

    def label(self) -> str:
        return self.params.label()


def instance(params: PresentationParams) -> Instance:
    return Instance(params, params.matched_pair())


def _delta2(T: HopfStructure, r: int) -> list[tuple[int, int, int, CycScalar]]:
    acc: dict = {}
    for s, t, c in T.comult[r]:
        for s1, s2, x in T.comult[s]:
            vadd(acc, (s1, s2, t), c * x)
    return [(a, b, d, c) for (a, b, d), c in acc.items()]


def _act(table, gv: Mapping, av: Mapping) -> dict:
    out: dict = {}
    for g, x in gv.items():
        row = table[g]
        for a, y in av.items():
            xy = x * y
            for t, z in row[a].items():
                vadd(out, t, xy * z)
    return out


# -- quadruples ------------------------------------------------------------------------------


@dataclass
class Quadruple:
    """Column data for u: A -> A', p: A -> H', r: H -> A', v: H -> H'."""

    u: list
    p: list
    r: list
    v: list
    tag: str = ""

    def to_json(self) -> dict[str, Any]:
        def cols(cs):
            return [[[t, c.to_json()] for t, c in sorted(col.items())] for col in cs]

        return {"tag": self.tag, "u": cols(self.u), "p": cols(self.p), "r": cols(self.r), "v": cols(self.v)}


@dataclass(frozen=True)
class QuadrupleFamily:
    """Parameterized quadruple shapes.

    * ``DiagonalPair(beta, eta)``: u scales X by beta, v scales x by eta, p and r trivial.
    * ``SwapPair(gamma, zeta)``: u and v trivial, p sends H^i X^j to zeta^j h^i x^j,
      r sends h^k x^l to gamma^l H^k X^l.
    * ``QDiagonal(beta)``: DiagonalPair(beta, 1/beta).
    * ``PV(zeta, eta)`` and ``UR(beta, gamma)``: the two mixed shapes whose
      morphisms land in one tensor factor only.
    """

    tag: str
    params: tuple

    def __post_init__(self):
        if self.tag not in ("DiagonalPair", "SwapPair", "QDiagonal", "PV", "UR"):
            raise ValueError(f"unknown family {self.tag!r}")
        for c in self.params:
            if not c:
                raise ValueError("family parameters must be nonzero")

    def label(self) -> str:
        return f"{self.tag}({', '.join(repr(c) for c in self.params)})"


def _trivial(src: HopfStructure, tgt: HopfStructure) -> list[dict]:
    unit = tgt.unit_vec()
    return [({k: v * c for k, v in unit.items()} if c else {}) for c in src.counit]


def _diag(d: TaftDescriptor, scale: CycScalar) -> list[dict]:
    return [{d.index(i, j): scale ** j} for i, j in d.basis()]


def _swap(src: TaftDescriptor, tgt: TaftDescriptor, scale: CycScalar) -> list[dict]:
    if src.m != tgt.m:
        raise ValueError("swap maps need equal Taft orders")
    return [{tgt.index(i, j): scale ** j} for i, j in src.basis()]


def quadruple_from_family(fam: QuadrupleFamily, src: Instance, tgt: Instance) -> Quadruple:
    A, H = src.mp.A, src.mp.Hside
    A2, H2 = tgt.mp.A, tgt.mp.Hside
    L = _field_order(src.mp.q, tgt.mp.q, *fam.params)
    ps = [_as_scalar(c, L) for c in fam.params]
    SA, SH, TA, TH = (taft_structure(x) for x in (A, H, A2, H2))
    if fam.tag in ("DiagonalPair", "QDiagonal"):
        beta = ps[0]
        eta = ps[1] if fam.tag == "DiagonalPair" else beta.inverse()
        return Quadruple(_diag(A2, beta) if A.m == A2.m else _fail_shape(),
                         _trivial(SA, TH), _trivial(SH, TA), _diag(H2, eta), fam.label())
    if fam.tag == "SwapPair":
        gamma, zeta = ps
        return Quadruple(_trivial(SA, TA), _swap(A, H2, zeta), _swap(H, A2, gamma), _trivial(SH, TH), fam.label())
    if fam.tag == "PV":
        zeta, eta = ps
        return Quadruple(_trivial(SA, TA), _swap(A, H2, zeta), _trivial(SH, TA), _diag(H2, eta), fam.label())
    beta, gamma = ps
    return Quadruple(_diag(A2, beta), _trivial(SA, TH), _swap(H, A2, gamma), _trivial(SH, TH), fam.label())


def _fail_shape():
    raise ValueError("diagonal maps need equal Taft orders")


def quadruple_to_morphism(qd: Quadruple, src: Instance, tgt: Instance, validate: bool = True) -> LinearMap:
    """psi(a |x| g) = u(a1)(p(a2) |>' r(g1)) |x| (p(a3) <|' r(g2)) v(g3) on every basis element.

    Raises ValueError when a component is not a unital coalgebra map.
    """
    A, H = src.A, src.H
    A2, H2 = tgt.A, tgt.H
    if validate:
        rep = AxiomReport("components")
        for name, cols, S, T in (("u", qd.u, A, A2), ("p", qd.p, A, H2), ("r", qd.r, H, A2), ("v", qd.v, H, H2)):
            _check_coalgebra_map(name, cols, S, T, rep)
        if not rep.passed:
            raise ValueError(f"component {rep.failures[0][1][0]} is not a unital coalgebra map")
    tl, tr = tgt.actions.left, tgt.actions.right
    DH2 = H2.dim
    d2A = [_delta2(A, a) for a in range(A.dim)]
    d2H = [_delta2(H, g) for g in range(H.dim)]
    cols = []
    for a in range(A.dim):
        for g in range(H.dim):
            acc: dict = {}
            for a1, a2, a3, x in d2A[a]:
                ua, pa2, pa3 = qd.u[a1], qd.p[a2], qd.p[a3]
                if not ua or not pa2 or not pa3:
                    continue
                for g1, g2, g3, y in d2H[g]:
                    rg1, rg2, vg = qd.r[g1], qd.r[g2], qd.v[g3]
                    if not rg1 or not rg2 or not vg:
                        continue
                    left = A2.mul(ua, _act(tl, pa2, rg1))
                    if not left:
                        continue
                    right = H2.mul(_act(tr, pa3, rg2), vg)
                    xy = x * y
                    for s, c1 in left.items():
                        k = xy * c1
                        for t, c2 in right.items():
                            vadd(acc, s * DH2 + t, k * c2)
            cols.append(acc)
    return LinearMap(src.structure, tgt.structure, cols, qd.tag or "quadruple")


def _check_coalgebra_map(name: str, cols: list, S: HopfStructure, T: HopfStructure, rep: AxiomReport) -> None:
    rep.count("unital-coalgebra-map")
    if cols[0] != T.unit_vec():
        rep.fail("unital-coalgebra-map", (name, "1"), vsub(cols[0], T.unit_vec()))
    for r in range(S.dim):
        rep.count("unital-coalgebra-map", 2)
        e = T.eps(cols[r])
        if e != S.counit[r]:
            rep.fail("unital-coalgebra-map", (name, "counit", S.basis[r]), e - S.counit[r])
        lhs = T.comul(cols[r])
        rhs: dict = {}
        for s, t, c in S.comult[r]:
            for a, x in cols[s].items():
                for b, y in cols[t].items():
                    vadd(rhs, (a, b), c * x * y)
        if lhs != rhs:
            rep.fail("unital-coalgebra-map", (name, "comult", S.basis[r]), vsub(lhs, rhs))


def _tensor(u: Mapping, v: Mapping, c: CycScalar, acc: dict) -> None:
    for s, x in u.items():
        cx = c * x
        for t, y in v.items():
            vadd(acc, (s, t), cx * y)


def check_quadruple(qd: Quadruple, src: Instance, tgt: Instance) -> AxiomReport:
    """Evaluate C1..C8 (and the coalgebra-map property of each component) with exact residuals."""
    A, H = src.A, src.H
    A2, H2 = tgt.A, tgt.H
    sl, sr = src.actions.left, src.actions.right
    tl, tr = tgt.actions.left, tgt.actions.right
    u, p, r, v = qd.u, qd.p, qd.r, qd.v
    rep = AxiomReport(f"{qd.tag}: {src.label()} -> {tgt.label()}")
    for name, cols, S, T in (("u", u, A, A2), ("p", p, A, H2), ("r", r, H, A2), ("v", v, H, H2)):
        _check_coalgebra_map(name, cols, S, T, rep)

    for a in range(A.dim):
        rep.count("C1")
        lhs, rhs = {}, {}
        for a1, a2, c in A.comult[a]:
            _tensor(u[a1], p[a2], c, lhs)
            _tensor(u[a2], p[a1], c, rhs)
        if lhs != rhs:
            rep.fail("C1", A.basis[a], vsub(lhs, rhs))
    for g in range(H.dim):
        rep.count("C2")
        lhs, rhs = {}, {}
        for g1, g2, c in H.comult[g]:
            _tensor(r[g1], v[g2], c, lhs)
            _tensor(r[g2], v[g1], c, rhs)
        if lhs != rhs:
            rep.fail("C2", H.basis[g], vsub(lhs, rhs))

    def lin(cols, vec):
        out: dict = {}
        for k, c in vec.items():
            for t, x in cols[k].items():
                vadd(out, t, c * x)
        return out

    for a in range(A.dim):
        for b in range(A.dim):
            ab = dict(A.mult[a][b])
            rep.count("C3")
            lhs = lin(u, ab)
            rhs: dict = {}
            for a1, a2, c in A.comult[a]:
                term = A2.mul(u[a1], _act(tl, p[a2], u[b]))
                for t, x in term.items():
                    vadd(rhs, t, c * x)
            if lhs != rhs:
                rep.fail("C3", (A.basis[a], A.basis[b]), vsub(lhs, rhs))
            rep.count("C4")
            lhs = lin(p, ab)
            rhs = {}
            for b1, b2, c in A.comult[b]:
                term = H2.mul(_act(tr, p[a], u[b1]), p[b2])
                for t, x in term.items():
                    vadd(rhs, t, c * x)
            if lhs != rhs:
                rep.fail("C4", (A.basis[a], A.basis[b]), vsub(lhs, rhs))
    for t_ in range(H.dim):
        for g in range(H.dim):
            tg = dict(H.mult[t_][g])
            rep.count("C5")
            lhs = lin(r, tg)
            rhs = {}
            for t1, t2, c in H.comult[t_]:
                term = A2.mul(r[t1], _act(tl, v[t2], r[g]))
                for t, x in term.items():
                    vadd(rhs, t, c * x)
            if lhs != rhs:
                rep.fail("C5", (H.basis[t_], H.basis[g]), vsub(lhs, rhs))
            rep.count("C6")
            lhs = lin(v, tg)
            rhs = {}
            for g1, g2, c in H.comult[g]:
                term = H2.mul(_act(tr, v[t_], r[g1]), v[g2])
                for t, x in term.items():
                    vadd(rhs, t, c * x)
            if lhs != rhs:
                rep.fail("C6", (H.basis[t_], H.basis[g]), vsub(lhs, rhs))

    d2A = [_delta2(A, b) for b in range(A.dim)]
    d2H = [_delta2(H, g) for g in range(H.dim)]
    for g in range(H.dim):
        for b in range(A.dim):
            # C7
            rep.count("C7")
            lhs = {}
            for g1, g2, c in H.comult[g]:
                term = A2.mul(r[g1], _act(tl, v[g2], u[b]))
                for t, x in term.items():
                    vadd(lhs, t, c * x)
            rhs = {}
            for g1, g2, g3, x in d2H[g]:
                for b1, b2, b3, y in d2A[b]:
                    k = x * y
                    w1 = sl[g1][b1]
                    if not w1:
                        continue
                    w2 = sl[g2][b2]
                    w3 = sr[g3][b3]
                    if not w2 or not w3:
                        continue
                    term = A2.mul(lin(u, w1), _act(tl, lin(p, w2), lin(r, w3)))
                    for t, z in term.items():
                        vadd(rhs, t, k * z)
            if lhs != rhs:
                rep.fail("C7", (H.basis[g], A.basis[b]), vsub(lhs, rhs))
            # C8
            rep.count("C8")
            lhs = {}
            for b1, b2, c in A.comult[b]:
                term = H2.mul(_act(tr, v[g], u[b1]), p[b2])
                for t, x in term.items():
                    vadd(lhs, t, c * x)
            rhs = {}
            for g1, g2, g3, x in d2H[g]:
                for b1, b2, b3, y in d2A[b]:
                    k = x * y
                    w1 = sl[g1][b1]
                    w2 = sr[g2][b2]
                    w3 = sr[g3][b3]
                    if not w1 or not w2 or not w3:
                        continue
                    term = H2.mul(_act(tr, lin(p, w1), lin(r, w2)), lin(v, w3))
                    for t, z in term.items():
                        vadd(rhs, t, k * z)
            if lhs != rhs:
                rep.fail("C8", (H.basis[g], A.basis[b]), vsub(lhs, rhs))
    return rep


def is_hopf_iso(f: LinearMap) -> bool:
    """Multiplicative, unital, comultiplicative, counital on all basis pairs, and of full rank."""
    return is_hopf_isomorphism(f)


# -- isomorphism search -------------------------------------------------------------------------


@dataclass
class IsoResult:
    source: str
    target: str
    witness: LinearMap | None
    witness_family: str | None
    refutations: list = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.witness is not None

    def to_json(self) -> dict[str, Any]:
        return {
            "source": self.source,
            "target": self.target,
            "isomorphic": self.found,
            "witness_family": self.witness_family,
            "refutations": self.refutations,
        }


def _candidates(src: Instance, tgt: Instance) -> list[QuadrupleFamily]:
    L = _field_order(src.mp.q, tgt.mp.q)
    reps = [rational(1, L), rational(-1, L)]
    fams: list[QuadrupleFamily] = []
    betas = list(reps)
    if src.params.is_q and tgt.params.is_q:
        ratio = src.params.param / tgt.params.param
        if ratio not in betas:
            betas.insert(0, ratio)
    for b in betas:
        for e in reps:
            fams.append(QuadrupleFamily("DiagonalPair", (b, e)))
    # the swap-type components are coalgebra maps only when both Taft factors share q
    if src.mp.n == src.mp.m == tgt.mp.n == tgt.mp.m and src.mp.qbar == src.mp.q:
        for g in reps:
            for z in reps:
                fams.append(QuadrupleFamily("SwapPair", (g, z)))
        fams.append(QuadrupleFamily("PV", (reps[0], reps[0])))
        fams.append(QuadrupleFamily("UR", (reps[0], reps[0])))
    return fams


def _compatible(src: Instance, tgt: Instance) -> bool:
    a, b = src.mp, tgt.mp
    return (a.n, a.m) == (b.n, b.m) and a.qbar == b.qbar and a.q == b.q


def iso_search(src: PresentationParams | Instance, tgt: PresentationParams | Instance,
               confirm: bool = False) -> IsoResult:
    """Try the structured quadruple families in order and return the first bijective morphism.

    Each candidate is checked against C1..C8; a passing candidate is turned into a
    linear map whose exact rank decides bijectivity.  With ``confirm`` the witness
    is also checked directly as a Hopf map.
    """
    s = src if isinstance(src, Instance) else instance(src)
    t = tgt if isinstance(tgt, Instance) else instance(tgt)
    if not _compatible(s, t):
        raise ValueError("source and target must factor through the same pair of Taft algebras")
    res = IsoResult(s.label(), t.label(), None, None)
    for fam in _candidates(s, t):
        qd = quadruple_from_family(fam, s, t)
        rep = check_quadruple(qd, s, t)
        if not rep.passed:
            first = rep.failures[0]
            res.refutations.append({
                "family": fam.label(),
                "failed": sorted(rep.failed_axioms()),
                "first": {"axiom": first[0], "at": _plain(first[1]), "residual": _plain(first[2])},
            })
            continue
        f = quadruple_to_morphism(qd, s, t, validate=False)
        rank = f.matrix_rank()
        if rank != f.domain.dim:
            res.refutations.append({"family": fam.label(), "failed": ["bijectivity"], "rank": rank})
            continue
        if confirm and not check_hopf_map(f).passed:
            res.refutations.append({"family": fam.label(), "failed": ["direct-check"]})
            continue
        res.witness, res.witness_family = f, fam.label()
        break
    return res


def _plain(x):
    if isinstance(x, CycScalar):
        return repr(x)
    if isinstance(x, dict):
        return {repr(k): repr(v) for k, v in sorted(x.items(), key=lambda e: repr(e[0]))}
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    return x


# -- falsification of the (u, p) shapes ------------------------------------------------------


SHAPES = ("I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX")


def _shape_values(shape: str, A: TaftDescriptor, H: TaftDescriptor, alpha: CycScalar,
                  beta: CycScalar, a: int, b: int) -> tuple[dict, dict, dict, dict]:
    """Generator values u(H), u(X), p(H), p(X) for the nine shapes, as index vectors."""
    one = CycScalar.one(alpha.order)

    def Hp(k):
        return {A.index(k % A.m, 0): one}

    def hp(k):
        return {H.index(k % H.m, 0): one}

    def one_minus(scale, g_index):
        # scale * (1 - g) for a group-like basis index
        out: dict = {}
        vadd(out, 0, scale)
        vadd(out, g_index, -scale)
        return out

    aa = 1 if shape in ("I", "II", "III", "IV") else a
    if shape in ("IV", "VI", "VII"):
        aa = 0
    bb = {"I": 1, "II": 0, "III": b, "IV": 1, "V": 1, "VI": 0, "VII": b, "VIII": 0, "IX": b}[shape]
    uH, pH = Hp(aa), hp(bb)
    uX = one_minus(alpha, A.index(aa % A.m, 0)) if aa else {}
    pX = one_minus(alpha, H.index(bb % H.m, 0)) if bb else {}
    if shape == "II":
        vadd(uX, A.index(0, 1), beta)
    if shape == "IV":
        vadd(pX, H.index(0, 1), beta)
    return uH, uX, pH, pX


def shape_residuals(src: Instance, tgt: Instance, shape: str, alpha, beta=1, a: int = 2, b: int = 2) -> dict[str, Any]:
    """Consequences of C3 and C4 at (X, H) and (H, X) for one (u, p) shape.

    Returns the two residual vectors and whether the morphism would kill X |x| 1.
    """
    A2, H2 = tgt.mp.A, tgt.mp.Hside
    TA, TH = tgt.A, tgt.H
    tl, tr = tgt.actions.left, tgt.actions.right
    L = _field_order(tgt.mp.q, alpha, beta)
    al, be = _as_scalar(alpha, L), _as_scalar(beta, L)
    uH, uX, pH, pX = _shape_values(shape, A2, H2, al, be, a, b)
    qbar = src.mp.qbar
    unitA = TA.unit_vec()
    # C3: u(XH) - qbar u(HX)
    uXH = TA.mul(uX, _act(tl, pH, uH))
    for t, c in _act(tl, pX, uH).items():
        vadd(uXH, t, c)
    uHX = TA.mul(uH, _act(tl, pH, uX))
    co1 = vsub(uXH, {k: qbar * c for k, c in uHX.items()})
    # C4: p(XH) - qbar p(HX)
    pXH = TH.mul(_act(tr, pX, uH), pH)
    pHX = TH.mul(_act(tr, pH, uX), pH)
    for t, c in TH.mul(_act(tr, pH, unitA), pX).items():
        vadd(pHX, t, c)
    co2 = vsub(pXH, {k: qbar * c for k, c in pHX.items()})
    # psi(X |x| 1) = u(X) |x| p(H) + 1 |x| p(X)
    kills = not uX and not pX
    return {"shape": shape, "alpha": al, "beta": be, "a": a, "b": b,
            "co1": co1, "co2": co2, "kills_X": kills,
            "survives": not co1 and not co2 and not kills}


def falsification_grid(src: Instance, tgt: Instance, alphas: Sequence = (0, 1, -1, 2),
                       betas: Sequence = (1, -1, 2)) -> list[dict[str, Any]]:
    """Evaluate every shape on a parameter grid, iterating the exponents 2 <= a < n, 2 <= b < m."""
    n, m = tgt.mp.n, tgt.mp.m
    out = []
    for shape in SHAPES:
        a_range = range(2, n) if shape in ("V", "VIII", "IX") else [2]
        b_range = range(2, m) if shape in ("III", "VII", "IX") else [2]
        beta_range = betas if shape in ("II", "IV") else [1]
        for a in a_range:
            for b in b_range:
                for al in alphas:
                    for be in beta_range:
                        out.append(shape_residuals(src, tgt, shape, al, be, a, b))
    return out


# -- classification -----------------------------------------------------------------------------


def formula_count(n: int, m: int, qbar: CycScalar, q: CycScalar) -> int:
    """Number of isomorphism types by the closed counting formula, with nu(d) = |U_d|."""
    L = lcm(_field_order(qbar, q), m, n)
    d = gcd(m, n)
    nu = len(roots_of_unity_group(d, L))
    qb, qq = _as_scalar(qbar, L), _as_scalar(q, L)
    if m == n == 2:
        return 3
    if m != n:
        return nu
    if qb == qq:
        return nu // 2 + 1 if nu % 2 == 0 else (nu + 1) // 2
    if qb == qq ** (n - 1):
        return nu + 1
    return nu


@dataclass
class ClassReport:
    n: int
    m: int
    qbar: CycScalar
    q: CycScalar
    representatives: list
    classes: list
    count: int
    formula_count: int
    witnesses: list
    refutations: list

    @property
    def consistent(self) -> bool:
        return self.count == self.formula_count

    def to_json(self) -> dict[str, Any]:
        return {
            "instance": {"n": self.n, "m": self.m, "qbar": self.qbar.to_json(), "q": self.q.to_json()},
            "representatives": [p.label() for p in self.representatives],
            "classes": [[self.representatives[i].label() for i in cls] for cls in self.classes],
            "count": self.count,
            "formula_count": self.formula_count,
            "witnesses": self.witnesses,
            "refutations": self.refutations,
        }


def representatives(n: int, m: int, qbar, q) -> list[PresentationParams]:
    L = lcm(_field_order(qbar, q), m, n)
    qb, qq = _as_scalar(qbar, L), _as_scalar(q, L)
    reps = [tsigma(n, m, qb, qq, s) for s in roots_of_unity_group(gcd(m, n), L)]
    if m == n and qb == qq ** (n - 1):
        reps.append(qalpha(n, qq, 1))
    return reps


def classify(n: int, m: int, qbar, q) -> ClassReport:
    """Group the representatives by pairwise isomorphism search and compare with the closed count."""
    L = lcm(_field_order(qbar, q), m, n)
    qb, qq = _as_scalar(qbar, L), _as_scalar(q, L)
    reps = representatives(n, m, qb, qq)
    insts = [instance(p) for p in reps]
    parent = list(range(len(reps)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    witnesses, refutations = [], []
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            res = iso_search(insts[i], insts[j])
            if res.found:
                witnesses.append({"source": res.source, "target": res.target, "family": res.witness_family})
                parent[find(j)] = find(i)
            else:
                refutations.append(res.to_json())
    groups: dict[int, list[int]] = {}
    for i in range(len(reps)):
        groups.setdefault(find(i), []).append(i)
    classes = sorted(groups.values())
    return ClassReport(n, m, qb, qq, reps, classes, len(classes), formula_count(n, m, qb, qq),
                       witnesses, refutations)


# -- automorphisms ------------------------------------------------------------------------------


def algebra_map(src: HopfStructure, tgt: HopfStructure, images: Mapping[str, Mapping[int, CycScalar]],
                name: str = "") -> LinearMap:
    """Extend generator images multiplicatively over the normal basis H^i X^j h^k x^l of ``src``."""
    from .bicrossed import _last_letter

    cols: list = [None] * src.dim
    cols[0] = tgt.unit_vec()
    for r in range(1, src.dim):
        prev, letter = _last_letter(src.basis[r])
        cols[r] = tgt.mul(cols[src.index[prev]], images[letter])
    return LinearMap(src, tgt, cols, name)


def _gen(P: HopfStructure, letter: str, c: CycScalar) -> dict:
    idx = {"H": (1, 0, 0, 0), "X": (0, 1, 0, 0), "h": (0, 0, 1, 0), "x": (0, 0, 0, 1)}[letter]
    return {P.index[idx]: c}


def psi_map(P: HopfStructure, beta, eta) -> LinearMap:
    one = P.one()
    return algebra_map(P, P, {"H": _gen(P, "H", one), "X": _gen(P, "X", beta),
                              "h": _gen(P, "h", one), "x": _gen(P, "x", eta)}, f"psi({beta!r},{eta!r})")


def swap_map(P: HopfStructure, zeta, gamma) -> LinearMap:
    one = P.one()
    return algebra_map(P, P, {"H": _gen(P, "h", one), "X": _gen(P, "x", zeta),
                              "h": _gen(P, "H", one), "x": _gen(P, "X", gamma)}, f"phi({zeta!r},{gamma!r})")


def phi_alpha(src: HopfStructure, tgt: HopfStructure, c) -> LinearMap:
    """Generator map fixing H, h, x and sending X to c X."""
    one = src.one()
    return algebra_map(src, tgt, {"H": _gen(tgt, "H", one), "X": _gen(tgt, "X", c),
                                  "h": _gen(tgt, "h", one), "x": _gen(tgt, "x", one)}, f"X->{c!r}X")


@dataclass
class AutFamily:
    tag: str
    law: str
    verified: bool
    checked: int


@dataclass
class AutReport:
    params: PresentationParams
    group: str
    families: list
    laws: dict
    upsilon_ok: bool | None
    externally_sourced: bool = False
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(f.verified for f in self.families) and all(self.laws.values()) and self.upsilon_ok is not False

    def to_json(self) -> dict[str, Any]:
        return {
            "algebra": self.params.label(),
            "group": self.group,
            "families": [{"tag": f.tag, "law": f.law, "verified": f.verified, "checked": f.checked}
                         for f in self.families],
            "laws": dict(sorted(self.laws.items())),
            "semidirect_check": self.upsilon_ok,
            "externally_sourced": self.externally_sourced,
            "pass": self.passed,
            "failures": self.failures,
        }


def default_grid(p: PresentationParams) -> list[CycScalar]:
    L = p.order
    d = gcd(p.n, p.m)
    zeta = roots_of_unity_group(d, lcm(L, d))[1] if d > 1 else rational(1, L)
    if zeta.order != L:
        # -1 may live in a smaller field than Q(zeta_d)
        zeta = rational(zeta.to_fraction(), L)
    out = []
    for c in (rational(1, L), rational(-1, L), rational(2, L), zeta):
        if c not in out:
            out.append(c)
    return out


def automorphisms(p: PresentationParams, grid: Sequence | None = None) -> AutReport:
    """Parameterized automorphism families of a presented algebra with their composition laws checked."""
    P = presentation(p)
    g = list(grid) if grid is not None else default_grid(p)
    g = [_as_scalar(c, p.order) for c in g]
    verified_cache: dict = {}
    failures: list = []

    def ok(f: LinearMap, key) -> bool:
        if key not in verified_cache:
            verified_cache[key] = is_hopf_isomorphism(f)
            if not verified_cache[key]:
                failures.append(f.name)
        return verified_cache[key]

    def same(f1: LinearMap, f2: LinearMap) -> bool:
        return f1.columns == f2.columns

    laws: dict[str, bool] = {}
    fams: list[AutFamily] = []
    if p.is_q:
        if p.n == 2:
            return _aut_q2(p, P, g)
        phis = {b: psi_map(P, b, b.inverse()) for b in g}
        good = all(ok(phis[b], ("phi", b)) for b in g)
        fams.append(AutFamily("phi_beta", "X -> beta X, x -> x / beta", good, len(g)))
        law = True
        for b in g:
            for b2 in g:
                comp = phis[b].compose(phis[b2])
                pred = psi_map(P, b * b2, (b * b2).inverse())
                law &= same(comp, pred) and ok(pred, ("phi", b * b2))
        laws["phi_b . phi_b' = phi_bb'"] = law
        # psi_{beta, eta} with eta != 1/beta is not an automorphism
        laws["psi(2,1) rejected"] = not is_hopf_isomorphism(psi_map(P, g[0] * 2, g[0]))
        return AutReport(p, "k*", fams, laws, None, failures=failures)

    psis = {(b, e): psi_map(P, b, e) for b in g for e in g}
    good = all(ok(f, ("psi",) + k) for k, f in psis.items())
    fams.append(AutFamily("psi_beta_eta", "X -> beta X, x -> eta x", good, len(psis)))
    law = True
    for (b, e), f in psis.items():
        for (b2, e2), f2 in psis.items():
            pred = psi_map(P, b * b2, e * e2)
            law &= same(f.compose(f2), pred) and ok(pred, ("psi", b * b2, e * e2))
    laws["psi . psi' = psi(bb', ee')"] = law
    sigma = p.param
    swap_ok = p.n == p.m and p.qbar == p.q and sigma * sigma == 1
    upsilon = None
    if swap_ok:
        phis = {(z, c): swap_map(P, z, c) for z in g for c in g}
        good = all(ok(f, ("phi",) + k) for k, f in phis.items())
        fams.append(AutFamily("phi_zeta_gamma", "X -> zeta x, H -> h, x -> gamma X, h -> H", good, len(phis)))
        l1 = l2 = l3 = True
        for (z, c), f in phis.items():
            for (z2, c2), f2 in phis.items():
                l1 &= same(f.compose(f2), psi_map(P, z2 * c, z * c2))
            for (b, e), f2 in psis.items():
                l2 &= same(f.compose(f2), swap_map(P, b * z, e * c))
                l3 &= same(f2.compose(f), swap_map(P, z * e, c * b))
        laws["phi . phi' = psi(z'g, zg')"] = l1
        laws["phi . psi = phi(bz, eg)"] = l2
        laws["psi . phi = phi(ze, gb)"] = l3
        upsilon = _check_upsilon_pairs(g)
        group = "(k* x k*) semidirect Z2"
    else:
        # the swap shape is not even an algebra map here
        try:
            rejected = not is_hopf_isomorphism(swap_map(P, g[0], g[0]))
        except KeyError:
            rejected = True
        laws["swap family rejected"] = rejected
        group = "k* x k*"
    return AutReport(p, group, fams, laws, upsilon, failures=failures)


def _semidirect_mul(x, y):
    (a, b), s = x
    (c, d), t = y
    if s:
        c, d = d, c
    return ((a * c, b * d), s ^ t)


def _check_upsilon_pairs(g: Sequence[CycScalar]) -> bool:
    """Upsilon(psi_{b,e}) = ((b,e),0), Upsilon(phi_{z,c}) = ((c,z),1) turns the laws into the semidirect product."""
    ok = True
    for b in g:
        for e in g:
            for z in g:
                for c in g:
                    # phi . phi'
                    ok &= _semidirect_mul(((c, z), 1), ((e, b), 1)) == ((b * c, z * e), 0)
                    # phi_{z,c} . psi_{b,e} = phi_{bz, ec}
                    ok &= _semidirect_mul(((c, z), 1), ((b, e), 0)) == ((e * c, b * z), 1)
                    # psi_{b,e} . phi_{z,c} = phi_{ze, cb}
                    ok &= _semidirect_mul(((b, e), 0), ((c, z), 1)) == ((c * b, z * e), 1)
    return ok


def _aut_q2(p: PresentationParams, P: HopfStructure, g: Sequence[CycScalar]) -> AutReport:
    """n = 2: the phi_beta family plus Theta_beta (X -> beta x, x -> X / beta, H <-> h)."""
    failures: list = []
    cache: dict = {}

    def ok(f, key):
        if key not in cache:
            cache[key] = is_hopf_isomorphism(f)
            if not cache[key]:
                failures.append(f.name)
        return cache[key]

    def phi(b):
        return psi_map(P, b, b.inverse())

    def theta(b):
        f = swap_map(P, b, b.inverse())
        f.name = f"Theta({b!r})"
        return f

    fams = [
        AutFamily("phi_beta", "X -> beta X, x -> x / beta", all(ok(phi(b), ("phi", b)) for b in g), len(g)),
        AutFamily("Theta_beta", "X -> beta x, x -> X / beta, H -> h, h -> H",
                  all(ok(theta(b), ("theta", b)) for b in g), len(g)),
    ]
    l1 = l2 = l3 = l4 = True
    for b in g:
        for b2 in g:
            l1 &= phi(b).compose(phi(b2)).columns == phi(b * b2).columns
            l2 &= theta(b).compose(theta(b2)).columns == phi(b2 / b).columns
            l3 &= theta(b).compose(phi(b2)).columns == theta(b2 * b).columns
            l4 &= phi(b2).compose(theta(b)).columns == theta(b / b2).columns
    laws = {
        "phi_b . phi_b' = phi_bb'": l1,
        "Theta_b . Theta_b' = phi_b'/b": l2,
        "Theta_b . phi_c = Theta_cb": l3,
        "phi_c . Theta_b = Theta_b/c": l4,
    }
    # Upsilon(phi_b) = (b, 0), Upsilon(Theta_b) = (1/b, 1) into k* with inversion twist
    def mul(x, y):
        (a, s), (c, t) = x, y
        return (a * (c.inverse() if s else c), s ^ t)

    up = True
    for b in g:
        for c in g:
            up &= mul((b.inverse(), 1), (c.inverse(), 1)) == (c / b, 0)
            up &= mul((b.inverse(), 1), (c, 0)) == ((c * b).inverse(), 1)
            up &= mul((c, 0), (b.inverse(), 1)) == ((b / c).inverse(), 1)
    return AutReport(p, "k* semidirect Z2", fams, laws, up, externally_sourced=True, failures=failures)


def double_witness(n: int, q) -> dict[str, Any]:
    """Verified isomorphism D(T_{n^2}(q)) -> Q^1_n(q): transport to Q^{-1}, then X -> -X."""
    from .bicrossed import bicrossed_product, transport_double

    tr = transport_double(n, q, alpha=-1)
    qq = tr.double.descriptor.q
    Qm1 = bicrossed_product(tr.target, name=f"Q^-1_{n}")
    ident_H = LinearMap(tr.double.pair.H, tr.target.actions().H,
                        [{r: tr.double.pair.H.one()} for r in range(tr.double.pair.H.dim)], "id")
    to_qm1 = bicrossed_map(tr.iso, ident_H, tr.double.structure, Qm1, "transport")
    Q1 = presentation(qalpha(n, qq, 1))
    Pm1 = presentation(qalpha(n, qq, -1))
    # the presented Q^{-1} and the bicrossed one share the basis labels
    relabel = LinearMap(Qm1, Pm1, [{Pm1.index[lab]: Qm1.one()} for lab in Qm1.basis], "relabel")
    phi = phi_alpha(Pm1, Q1, rational(-1, qq.order))
    total = phi.compose(relabel.compose(to_qm1))
    total.name = "D -> Q^1"
    return {
        "transport_matches": tr.matches,
        "raw_alpha": tr.raw_alpha,
        "scale": tr.scale,
        "witness": total,
        "transport_is_iso": is_hopf_isomorphism(to_qm1),
        "witness_is_iso": is_hopf_isomorphism(total),
    }
