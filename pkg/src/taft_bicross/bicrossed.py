"""Bicrossed products, their presentations by generators and relations, and the Drinfeld double."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterable, Mapping, Sequence

from .cyclotomic import CycScalar, multiplicative_order
from .hopf import HopfStructure, LinearMap, cop, dual, vadd
from .matched_pair import (
    ALPHA,
    SIGMA,
    ActionPair,
    MatchedPair,
    _as_scalar,
    _field_order,
    family_alpha,
    family_sigma,
)
from .taft import TaftDescriptor, taft_structure

LETTERS = "HXhx"
_RANK = {c: i for i, c in enumerate(LETTERS)}
Mono = tuple  # (i, j, k, l) meaning H^i X^j h^k x^l


# -- bicrossed product of an action pair --------------------------------------------------


def _pair_label(a, g):
    if isinstance(a, tuple) and isinstance(g, tuple) and all(isinstance(t, int) for t in a + g):
        return a + g
    return (a, g)


def bicrossed_product(mp: MatchedPair | ActionPair, name: str | None = None) -> HopfStructure:
    """A |x| H with (a|x|g)(c|x|f) = a(g1 |> c1) |x| (g2 <| c2) f, tensor coalgebra and twisted antipode.

    Basis index of a |x| g is a * dim(H) + g.
    """
    ap = mp.actions() if isinstance(mp, MatchedPair) else mp
    A, H = ap.A, ap.H
    DA, DH = A.dim, H.dim
    Lt, Rt = ap.left, ap.right

    # swap[g][c] = sum (g1 |> c1) (x) (g2 <| c2)
    swap = []
    for g in range(DH):
        row = []
        for c in range(DA):
            acc: dict = {}
            for g1, g2, x in H.comult[g]:
                for c1, c2, y in A.comult[c]:
                    u = Lt[g1][c1]
                    if not u:
                        continue
                    w = Rt[g2][c2]
                    xy = x * y
                    for s, cu in u.items():
                        k = xy * cu
                        for t, cw in w.items():
                            vadd(acc, (s, t), k * cw)
            row.append(tuple((s, t, c_) for (s, t), c_ in acc.items()))
        swap.append(row)

    mult = []
    for a in range(DA):
        amult = A.mult[a]
        for g in range(DH):
            srow = swap[g]
            row = []
            for c in range(DA):
                terms = srow[c]
                for f in range(DH):
                    acc = {}
                    for s, t, k in terms:
                        for u, x in amult[s]:
                            kx = k * x
                            for v, y in H.mult[t][f]:
                                vadd(acc, u * DH + v, kx * y)
                    row.append(tuple(sorted(acc.items())))
            mult.append(row)

    comult = []
    for a in range(DA):
        for g in range(DH):
            acc = {}
            for a1, a2, x in A.comult[a]:
                for g1, g2, y in H.comult[g]:
                    vadd(acc, (a1 * DH + g1, a2 * DH + g2), x * y)
            comult.append(tuple((s, t, c) for (s, t), c in sorted(acc.items())))
    counit = [A.counit[a] * H.counit[g] for a in range(DA) for g in range(DH)]

    def act_l(gv, av):
        out: dict = {}
        for g, x in gv.items():
            for a, y in av.items():
                for t, z in Lt[g][a].items():
                    vadd(out, t, x * y * z)
        return out

    def act_r(gv, av):
        out: dict = {}
        for g, x in gv.items():
            for a, y in av.items():
                for t, z in Rt[g][a].items():
                    vadd(out, t, x * y * z)
        return out

    # S(a |x| g) = S(g2) |> S(a2) |x| S(g1) <| S(a1)
    antipode = []
    SA = [dict(col) for col in A.antipode]
    SH = [dict(col) for col in H.antipode]
    for a in range(DA):
        for g in range(DH):
            acc = {}
            for a1, a2, x in A.comult[a]:
                for g1, g2, y in H.comult[g]:
                    left = act_l(SH[g2], SA[a2])
                    if not left:
                        continue
                    right = act_r(SH[g1], SA[a1])
                    xy = x * y
                    for s, u in left.items():
                        for t, w in right.items():
                            vadd(acc, s * DH + t, xy * u * w)
            antipode.append(tuple(sorted(acc.items())))

    unit: dict = {}
    for a, x in A.unit:
        for g, y in H.unit:
            vadd(unit, a * DH + g, x * y)
    basis = [_pair_label(A.basis[a], H.basis[g]) for a in range(DA) for g in range(DH)]
    return HopfStructure(basis, mult, comult, counit, antipode, tuple(sorted(unit.items())),
                         A.order, name if name is not None else f"bicrossed[{ap.name}]")


# -- presentations -----------------------------------------------------------------------------


@dataclass(frozen=True)
class PresentationParams:
    """Parameters of a presented Hopf algebra.

    ``family`` is "TSigma" (commutation scalar sigma) or "QAlpha" (deformation alpha, qbar = q^{n-1}).
    """

    family: str
    n: int
    m: int
    qbar: CycScalar
    q: CycScalar
    param: CycScalar

    @property
    def order(self) -> int:
        return self.q.order

    @property
    def is_q(self) -> bool:
        return self.family == "QAlpha"

    @property
    def commutation(self) -> CycScalar:
        """Scalar s in xH = sHx, hX = sXh."""
        return self.q if self.is_q else self.param

    def label(self) -> str:
        if self.is_q:
            return f"Q^{self.param!r}_{self.n}({self.q!r})"
        return f"T^{self.param!r}_{self.n},{self.m}({self.qbar!r},{self.q!r})"

    def matched_pair(self) -> MatchedPair:
        if self.is_q:
            return family_alpha(self.n, self.q, self.param)
        return family_sigma(self.n, self.m, self.qbar, self.q, self.param)

    def to_json(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "n": self.n,
            "m": self.m,
            "qbar": self.qbar.to_json(),
            "q": self.q.to_json(),
            "param": self.param.to_json(),
        }


def tsigma(n: int, m: int, qbar, q, sigma) -> PresentationParams:
    mp = family_sigma(n, m, qbar, q, sigma)  # validates
    return PresentationParams("TSigma", n, m, mp.qbar, mp.q, mp.param)


def qalpha(n: int, q, alpha) -> PresentationParams:
    mp = family_alpha(n, q, alpha)
    return PresentationParams("QAlpha", n, n, mp.qbar, mp.q, mp.param)


def params_of(mp: MatchedPair) -> PresentationParams:
    if mp.family == ALPHA:
        return PresentationParams("QAlpha", mp.n, mp.m, mp.qbar, mp.q, mp.param)
    if mp.family == SIGMA:
        return PresentationParams("TSigma", mp.n, mp.m, mp.qbar, mp.q, mp.param)
    raise ValueError(f"no presentation for family {mp.family!r}")


def rewrite_rules(p: PresentationParams) -> dict[str, list[tuple[CycScalar, str]]]:
    """Rules for every out-of-order adjacent pair; each maps to a linear combination of words."""
    s = p.commutation
    one = CycScalar.one(p.order)
    rules = {
        "XH": [(p.qbar, "HX")],
        "hH": [(one, "Hh")],
        "xH": [(s, "Hx")],
        "hX": [(s, "Xh")],
        "xh": [(p.q, "hx")],
    }
    if p.is_q:
        rules["xX"] = [(p.q, "Xx"), (p.param, ""), (-p.param, "Hh")]
    else:
        rules["xX"] = [(s, "Xx")]
    return rules


def _power_bounds(p: PresentationParams) -> dict[str, tuple[int, bool]]:
    # letter -> (nilpotency or order, True if the power is 1 rather than 0)
    return {"H": (p.n, True), "X": (p.n, False), "h": (p.m, True), "x": (p.m, False)}


def _redexes(word: str, rules: Mapping, bounds: Mapping) -> list[tuple[int, str]]:
    found = []
    for i in range(len(word) - 1):
        if word[i:i + 2] in rules:
            found.append((i, "pair"))
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        b, _ = bounds[word[i]]
        if j - i >= b:
            found.append((i, "power"))
        i = j
    found.sort()
    return found


def straighten(p: PresentationParams, word: str | Sequence[str], strategy: str = "leftmost") -> dict[Mono, CycScalar]:
    """Rewrite a word in H, X, h, x to a combination of normal monomials H^i X^j h^k x^l.

    ``strategy`` picks the leftmost or rightmost redex at every step.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    w0 = "".join(word)
    bad = set(w0) - set(LETTERS)
    if bad:
        raise ValueError(f"letters {sorted(bad)} are not generators")
    rules = rewrite_rules(p)
    bounds = _power_bounds(p)
    one = CycScalar.one(p.order)
    pending: dict[str, CycScalar] = {w0: one}
    done: dict[Mono, CycScalar] = {}
    while pending:
        w, c = pending.popitem()
        red = _redexes(w, rules, bounds)
        if not red:
            mono = (w.count("H"), w.count("X"), w.count("h"), w.count("x"))
            vadd(done, mono, c)
            continue
        pos, kind = red[0] if strategy == "leftmost" else red[-1]
        if kind == "pair":
            for k, rhs in rules[w[pos:pos + 2]]:
                vadd(pending, w[:pos] + rhs + w[pos + 2:], c * k)
        else:
            letter = w[pos]
            b, unit = bounds[letter]
            if unit:
                vadd(pending, w[:pos] + w[pos + b:], c)
    return done


class _NormalFormEngine:
    """Multiplication of normal monomials by single letters, memoized."""

    def __init__(self, p: PresentationParams):
        self.p = p
        self.n, self.m = p.n, p.m
        L = p.order
        self.one = CycScalar.one(L)
        self.s = p.commutation
        self._memo: dict = {}
        self._qpow = [p.q ** k for k in range(self.m)]
        self._qbpow = [p.qbar ** k for k in range(self.n)]
        self._spow = [self.s ** k for k in range(max(self.n, self.m) * 2)]

    def times(self, mono: Mono, letter: str) -> dict:
        key = (mono, letter)
        r = self._memo.get(key)
        if r is not None:
            return r
        i, j, k, l = mono
        n, m = self.n, self.m
        if letter == "x":
            r = {(i, j, k, l + 1): self.one} if l + 1 < m else {}
        elif letter == "h":
            r = {(i, j, (k + 1) % m, l): self._qpow[l]}
        elif letter == "H":
            r = {((i + 1) % n, j, k, l): self._qbpow[j] * self._spow[l]}
        elif letter == "X":
            if not self.p.is_q:
                r = {(i, j + 1, k, l): self._spow[k + l]} if j + 1 < n else {}
            elif l == 0:
                r = {(i, j + 1, k, 0): self._qpow[k]} if j + 1 < n else {}
            else:
                # M = M' x, and xX = qXx + alpha - alpha Hh
                prev = (i, j, k, l - 1)
                q, al = self.p.q, self.p.param
                r = {}
                for t, c in self.times(prev, "X").items():
                    for u, d in self.times(t, "x").items():
                        vadd(r, u, q * c * d)
                vadd(r, prev, al)
                for t, c in self.times(prev, "H").items():
                    for u, d in self.times(t, "h").items():
                        vadd(r, u, -al * c * d)
        else:
            raise ValueError(letter)
        self._memo[key] = r
        return r

    def times_vec(self, vec: Mapping[Mono, CycScalar], letter: str) -> dict:
        out: dict = {}
        for mono, c in vec.items():
            for t, d in self.times(mono, letter).items():
                vadd(out, t, c * d)
        return out


def _last_letter(mono: Mono) -> tuple[Mono, str] | None:
    i, j, k, l = mono
    if l:
        return (i, j, k, l - 1), "x"
    if k:
        return (i, j, k - 1, 0), "h"
    if j:
        return (i, j - 1, 0, 0), "X"
    if i:
        return (i - 1, 0, 0, 0), "H"
    return None


@lru_cache(maxsize=32)
def presentation(p: PresentationParams) -> HopfStructure:
    """Hopf structure of the presented algebra on the normal basis H^i X^j h^k x^l."""
    n, m = p.n, p.m
    eng = _NormalFormEngine(p)
    basis = [(i, j, k, l) for i in range(n) for j in range(n) for k in range(m) for l in range(m)]
    index = {b: r for r, b in enumerate(basis)}
    D = len(basis)
    one = eng.one
    zero = CycScalar.zero(p.order)

    # products by dynamic programming over the right factor
    mult: list[list] = []
    for r, b1 in enumerate(basis):
        prods: list[dict] = [None] * D  # type: ignore[list-item]
        prods[0] = {b1: one}
        for s in range(1, D):
            prev, letter = _last_letter(basis[s])
            prods[s] = eng.times_vec(prods[index[prev]], letter)
        mult.append([tuple(sorted((index[t], c) for t, c in v.items())) for v in prods])

    def mul(u: Mapping[int, CycScalar], v: Mapping[int, CycScalar]) -> dict:
        out: dict = {}
        for a, x in u.items():
            row = mult[a]
            for b, y in v.items():
                for t, z in row[b]:
                    vadd(out, t, x * y * z)
        return out

    def mul2(x: Mapping, y: Mapping) -> dict:
        out: dict = {}
        for (a, b), c1 in x.items():
            for (c, d), c2 in y.items():
                k = c1 * c2
                for t, x1 in mult[a][c]:
                    for u, x2 in mult[b][d]:
                        vadd(out, (t, u), k * x1 * x2)
        return out

    gi = {L_: index[(1 if L_ == "H" else 0, 1 if L_ == "X" else 0, 1 if L_ == "h" else 0, 1 if L_ == "x" else 0)]
          for L_ in LETTERS}
    e = 0
    gen_delta = {
        "H": {(gi["H"], gi["H"]): one},
        "X": {(gi["X"], gi["H"]): one, (e, gi["X"]): one},
        "h": {(gi["h"], gi["h"]): one},
        "x": {(gi["x"], gi["h"]): one, (e, gi["x"]): one},
    }
    qbar_pow = p.qbar ** (n - 1)
    gen_S = {
        "H": {index[(n - 1, 0, 0, 0)]: one},
        "X": {index[(n - 1, 1, 0, 0)]: -(p.q if p.is_q else qbar_pow)},
        "h": {index[(0, 0, m - 1, 0)]: one},
        "x": {index[(0, 0, m - 1, 1)]: -(p.q ** (m - 1))},
    }
    deltas: list[dict] = [None] * D  # type: ignore[list-item]
    antis: list[dict] = [None] * D  # type: ignore[list-item]
    deltas[0] = {(0, 0): one}
    antis[0] = {0: one}
    for s in range(1, D):
        prev, letter = _last_letter(basis[s])
        pi = index[prev]
        deltas[s] = mul2(deltas[pi], gen_delta[letter])
        antis[s] = mul(gen_S[letter], antis[pi])

    comult = [tuple((a, b, c) for (a, b), c in sorted(dd.items())) for dd in deltas]
    antipode = [tuple(sorted(v.items())) for v in antis]
    counit = [one if (j == 0 and l == 0) else zero for (i, j, k, l) in basis]
    return HopfStructure(basis, mult, comult, counit, antipode, ((0, one),), p.order, p.label())


def random_words(count: int, max_len: int, seed: int = 0) -> list[str]:
    rng = random.Random(seed)
    return ["".join(rng.choice(LETTERS) for _ in range(rng.randint(0, max_len))) for _ in range(count)]


def straighten_fast(p: PresentationParams, word: str) -> dict[Mono, CycScalar]:
    """Normal form by multiplying letters onto the unit with the memoized engine."""
    eng = _engine(p)
    vec = {(0, 0, 0, 0): CycScalar.one(p.order)}
    for c in word:
        vec = eng.times_vec(vec, c)
    return vec


@lru_cache(maxsize=32)
def _engine(p: PresentationParams) -> _NormalFormEngine:
    return _NormalFormEngine(p)


# -- Drinfeld double ------------------------------------------------------------------------


@dataclass
class DrinfeldDouble:
    """D(T) = (T*)^cop |x| T with its action pair."""

    descriptor: TaftDescriptor
    pair: ActionPair
    structure: HopfStructure
    inverse_antipode: list


def double_actions(T: HopfStructure, name: str = "") -> tuple[ActionPair, list]:
    """Actions of the double: g <| f = <f, S^-1(g3) g1> g2 and g |> f = f(S^-1(g2) ? g1)."""
    D = T.dim
    A = cop(dual(T), name=f"({T.name}*)^cop")
    sinv = T.antipode_inverse()
    one = T.one()
    # (Delta (x) id) Delta
    delta2 = []
    for g in range(D):
        acc: dict = {}
        for s, t, c in T.comult[g]:
            for s1, s2, x in T.comult[s]:
                vadd(acc, (s1, s2, t), c * x)
        delta2.append(acc)
    right = []
    for g in range(D):
        row = []
        for f in range(D):
            out: dict = {}
            for (g1, g2, g3), c in delta2[g].items():
                val = T.mul(sinv[g3], {g1: one}).get(f)
                if val is not None:
                    vadd(out, g2, c * val)
            row.append(out)
        right.append(row)
    left = []
    for g in range(D):
        row = [dict() for _ in range(D)]
        for g1, g2, c in T.comult[g]:
            for y in range(D):
                prod = T.mul(T.mul(sinv[g2], {y: one}), {g1: one})
                for f, val in prod.items():
                    vadd(row[f], y, c * val)
        left.append(row)
    return ActionPair(A, T, left, right, name or f"double({T.name})"), sinv


def drinfeld_double(n: int, q: CycScalar) -> DrinfeldDouble:
    L = _field_order(q)
    qq = _as_scalar(q, L)
    if multiplicative_order(qq) != n:
        raise ValueError(f"q = {q!r} is not a primitive {n}-th root of unity")
    d = TaftDescriptor(n, qq)
    T = taft_structure(d)
    ap, sinv = double_actions(T, f"D(T_{n}^2)")
    return DrinfeldDouble(d, ap, bicrossed_product(ap, name=f"D(T_{n}^2({qq!r}))"), sinv)


def transport_pair(ap: ActionPair, phi: LinearMap, phi_inv: LinearMap) -> ActionPair:
    """Move the A side of an action pair along the isomorphism phi: A -> A'."""
    A2 = phi.codomain
    H = ap.H
    left, right = [], []
    for g in range(H.dim):
        lrow, rrow = [], []
        for a in range(A2.dim):
            pre = phi_inv.columns[a]
            acc_l: dict = {}
            acc_r: dict = {}
            for b, c in pre.items():
                for t, x in ap.left[g][b].items():
                    vadd(acc_l, t, c * x)
                for t, x in ap.right[g][b].items():
                    vadd(acc_r, t, c * x)
            lrow.append(phi.apply(acc_l))
            rrow.append(acc_r)
        left.append(lrow)
        right.append(rrow)
    return ActionPair(A2, H, left, right, f"{ap.name} transported")


def action_pairs_equal(a: ActionPair, b: ActionPair) -> bool:
    return a.left == b.left and a.right == b.right


def bicrossed_map(f_A: LinearMap, f_H: LinearMap, src: HopfStructure, tgt: HopfStructure, name: str = "") -> LinearMap:
    """f_A (x) f_H between bicrossed products with index a * dim(H) + g."""
    DH, DH2 = f_H.domain.dim, f_H.codomain.dim
    cols = []
    for a in range(f_A.domain.dim):
        for g in range(DH):
            acc: dict = {}
            for s, x in f_A.columns[a].items():
                for t, y in f_H.columns[g].items():
                    vadd(acc, s * DH2 + t, x * y)
            cols.append(acc)
    return LinearMap(src, tgt, cols, name)


def iter_generators() -> Iterable[str]:
    return iter(LETTERS)


def rescale_map(T: HopfStructure, d: TaftDescriptor, lam: CycScalar, name: str = "") -> LinearMap:
    """Automorphism of a Taft algebra fixing the group-like generator and scaling the skew one by lam."""
    cols = []
    for i, j in d.basis():
        cols.append({d.index(i, j): lam ** j})
    return LinearMap(T, T, cols, name or f"rescale({lam!r})")


@dataclass
class DoubleTransport:
    """Identification of the double's action pair with an alpha-family pair."""

    double: DrinfeldDouble
    composite: LinearMap      # (T*)^cop -> T(q^{n-1}) from the structural isomorphisms
    raw_alpha: CycScalar      # alpha obtained by transporting along ``composite`` alone
    scale: CycScalar          # lam with X -> lam X applied after ``composite``
    iso: LinearMap            # rescale o composite
    transported: ActionPair
    target: MatchedPair
    matches: bool


def transport_double(n: int, q: CycScalar, alpha=-1) -> DoubleTransport:
    """Carry the double's actions to T(q^{n-1}) and match them with family_alpha(n, q, alpha)."""
    from .linalg import inverse_columns
    from .taft import antipode_iso_columns, taft_dual

    dd = drinfeld_double(n, q)
    d = dd.descriptor
    target = family_alpha(n, d.q, alpha)
    Ad = target.A
    A_struct = taft_structure(Ad)
    psi = taft_dual(d).psi
    psi_inv = inverse_columns(psi.columns, d.order)
    siso = antipode_iso_columns(d)
    cols = []
    for f in range(d.dim):
        acc: dict = {}
        for g, c in psi_inv[f].items():
            for t, v in siso[g].items():
                vadd(acc, t, c * v)
        cols.append(acc)
    composite = LinearMap(dd.pair.A, A_struct, cols, "S-iso . psi^-1")
    raw = transport_pair(dd.pair, composite, LinearMap(A_struct, dd.pair.A, inverse_columns(cols, d.order)))
    # x <| X = raw_alpha (1 - h)
    x_idx, X_idx = d.index(0, 1), Ad.index(0, 1)
    raw_alpha = raw.right[x_idx][X_idx].get(0, CycScalar.zero(d.order))
    lam = raw_alpha / target.param
    iso = rescale_map(A_struct, Ad, lam).compose(composite)
    iso.name = "rescale . S-iso . psi^-1"
    moved = transport_pair(dd.pair, iso, LinearMap(A_struct, dd.pair.A, inverse_columns(iso.columns, d.order)))
    tgt_pair = target.actions()
    return DoubleTransport(dd, composite, raw_alpha, lam, iso, moved, target, action_pairs_equal(moved, tgt_pair))
