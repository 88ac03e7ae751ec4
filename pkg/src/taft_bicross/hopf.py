"""Finite-dimensional Hopf algebras given by exact structure constants.

A :class:`HopfStructure` stores, on a labelled basis e_0..e_{D-1}:

* ``mult[r][s]``  -- tuple of ``(t, c)`` with e_r e_s = sum c e_t
* ``comult[r]``   -- tuple of ``(s, t, c)`` with Delta(e_r) = sum c e_s (x) e_t
* ``counit[r]``   -- epsilon(e_r)
* ``antipode[r]`` -- tuple of ``(s, c)`` with S(e_r) = sum c e_s
* ``unit``        -- tuple of ``(r, c)`` giving 1

Vectors are plain ``dict[int, CycScalar]`` with zero entries pruned; tensors are
``dict[tuple[int, int], CycScalar]``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Hashable, Iterable, Mapping, Sequence

from .cyclotomic import CycScalar
from .linalg import inverse_columns

Vec = dict
Tensor = dict

DEFAULT_TRIPLE_LIMIT = 256
DEFAULT_TRIPLE_SAMPLES = 10_000
DEFAULT_SEED = 20_130_517


def vadd(acc: dict, key, c: CycScalar) -> None:
    """acc[key] += c, pruning zeros."""
    t = acc.get(key)
    if t is None:
        if c:
            acc[key] = c
    else:
        t = t + c
        if t:
            acc[key] = t
        else:
            del acc[key]


def vscale(v: Mapping, c: CycScalar) -> dict:
    if not c:
        return {}
    return {k: x * c for k, x in v.items()}


def vsub(a: Mapping, b: Mapping) -> dict:
    out = dict(a)
    for k, c in b.items():
        vadd(out, k, -c)
    return out


class HopfStructure:
    """Structure constants of a Hopf algebra over Q(zeta_L)."""

    def __init__(
        self,
        basis: Sequence[Hashable],
        mult: Sequence[Sequence[Sequence[tuple[int, CycScalar]]]],
        comult: Sequence[Sequence[tuple[int, int, CycScalar]]],
        counit: Sequence[CycScalar],
        antipode: Sequence[Sequence[tuple[int, CycScalar]]],
        unit: Sequence[tuple[int, CycScalar]],
        order: int,
        name: str = "",
    ):
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        self.index = {lab: i for i, lab in enumerate(self.basis)}
        self.mult = [[tuple(e) for e in row] for row in mult]
        self.comult = [tuple(e) for e in comult]
        self.counit = list(counit)
        self.antipode = [tuple(e) for e in antipode]
        self.unit = tuple(unit)
        self.order = order
        self.name = name
        if len(self.mult) != self.dim or len(self.comult) != self.dim:
            raise ValueError("structure tables do not match the basis size")

    def __repr__(self):
        return f"HopfStructure({self.name or '?'}, dim={self.dim})"

    # -- element operations ---------------------------------------------------

    def zero(self) -> CycScalar:
        return CycScalar.zero(self.order)

    def one(self) -> CycScalar:
        return CycScalar.one(self.order)

    def e(self, label: Hashable) -> dict:
        return {self.index[label]: self.one()}

    def unit_vec(self) -> dict:
        return dict(self.unit)

    def mul(self, u: Mapping[int, CycScalar], v: Mapping[int, CycScalar]) -> dict:
        out: dict = {}
        mult = self.mult
        for r, a in u.items():
            row = mult[r]
            for s, b in v.items():
                ab = a * b
                for t, c in row[s]:
                    vadd(out, t, ab * c)
        return out

    def comul(self, u: Mapping[int, CycScalar]) -> dict:
        out: dict = {}
        for r, a in u.items():
            for s, t, c in self.comult[r]:
                vadd(out, (s, t), a * c)
        return out

    def eps(self, u: Mapping[int, CycScalar]) -> CycScalar:
        acc = self.zero()
        for r, a in u.items():
            acc = acc + a * self.counit[r]
        return acc

    def S(self, u: Mapping[int, CycScalar]) -> dict:
        out: dict = {}
        for r, a in u.items():
            for s, c in self.antipode[r]:
                vadd(out, s, a * c)
        return out

    def mul2(self, x: Mapping, y: Mapping) -> dict:
        """Product in the tensor square."""
        out: dict = {}
        mult = self.mult
        for (a, b), c1 in x.items():
            for (c, d), c2 in y.items():
                k = c1 * c2
                left = mult[a][c]
                right = mult[b][d]
                for t, x1 in left:
                    kx = k * x1
                    for u, x2 in right:
                        vadd(out, (t, u), kx * x2)
        return out

    def power(self, u: Mapping[int, CycScalar], k: int) -> dict:
        out = self.unit_vec()
        for _ in range(k):
            out = self.mul(out, u)
        return out

    def comult_dict(self, r: int) -> dict:
        return {(s, t): c for s, t, c in self.comult[r]}

    def antipode_inverse(self) -> list[dict]:
        cols = [dict(col) for col in self.antipode]
        return inverse_columns(cols, self.order)

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict[str, Any]:
        def lab(x):
            return list(x) if isinstance(x, tuple) else x

        mult = []
        for r in range(self.dim):
            for s in range(self.dim):
                for t, c in sorted(self.mult[r][s], key=lambda e: e[0]):
                    mult.append([r, s, t, c.to_json()])
        comult = []
        for r in range(self.dim):
            for s, t, c in sorted(self.comult[r], key=lambda e: (e[0], e[1])):
                comult.append([r, s, t, c.to_json()])
        antipode = []
        for r in range(self.dim):
            for s, c in sorted(self.antipode[r], key=lambda e: e[0]):
                antipode.append([r, s, c.to_json()])
        return {
            "name": self.name,
            "dim": self.dim,
            "basis": [lab(b) for b in self.basis],
            "unit": [[r, c.to_json()] for r, c in sorted(self.unit, key=lambda e: e[0])],
            "mult": mult,
            "comult": comult,
            "counit": [c.to_json() for c in self.counit],
            "antipode": antipode,
        }

    @classmethod
    def from_json(cls, doc: Mapping[str, Any]) -> "HopfStructure":
        dim = doc["dim"]
        basis = [tuple(b) if isinstance(b, list) else b for b in doc["basis"]]
        mult: list[list[list]] = [[[] for _ in range(dim)] for _ in range(dim)]
        for r, s, t, c in doc["mult"]:
            mult[r][s].append((t, CycScalar.from_json(c)))
        comult: list[list] = [[] for _ in range(dim)]
        for r, s, t, c in doc["comult"]:
            comult[r].append((s, t, CycScalar.from_json(c)))
        antipode: list[list] = [[] for _ in range(dim)]
        for r, s, c in doc["antipode"]:
            antipode[r].append((s, CycScalar.from_json(c)))
        counit = [CycScalar.from_json(c) for c in doc["counit"]]
        unit = [(r, CycScalar.from_json(c)) for r, c in doc["unit"]]
        order = counit[0].order if counit else 1
        return cls(basis, mult, comult, counit, antipode, unit, order, doc.get("name", ""))


# -- building structures from callables ---------------------------------------


def from_functions(
    basis: Sequence[Hashable],
    order: int,
    mult: Callable[[int, int], Mapping[int, CycScalar]],
    comult: Callable[[int], Mapping[tuple[int, int], CycScalar]],
    counit: Callable[[int], CycScalar],
    antipode: Callable[[int], Mapping[int, CycScalar]],
    unit: Mapping[int, CycScalar],
    name: str = "",
) -> HopfStructure:
    D = len(basis)
    m = [[tuple(sorted(mult(r, s).items(), key=lambda e: e[0])) for s in range(D)] for r in range(D)]
    cm = [tuple((s, t, c) for (s, t), c in sorted(comult(r).items(), key=lambda e: e[0])) for r in range(D)]
    cu = [counit(r) for r in range(D)]
    an = [tuple(sorted(antipode(r).items(), key=lambda e: e[0])) for r in range(D)]
    return HopfStructure(basis, m, cm, cu, an, tuple(sorted(unit.items())), order, name)


def cop(hs: HopfStructure, name: str | None = None) -> HopfStructure:
    """Co-opposite Hopf algebra: flipped comultiplication, inverse antipode."""
    sinv = hs.antipode_inverse()
    comult = [tuple((t, s, c) for s, t, c in row) for row in hs.comult]
    antipode = [tuple(sorted(col.items())) for col in sinv]
    return HopfStructure(
        hs.basis, hs.mult, comult, hs.counit, antipode, hs.unit, hs.order,
        name if name is not None else f"{hs.name}^cop",
    )


def dual(hs: HopfStructure, name: str | None = None) -> HopfStructure:
    """Dual Hopf algebra on the dual basis f_r (f_r(e_s) = delta_rs), by transposition."""
    D = hs.dim
    mult: list[list[dict]] = [[{} for _ in range(D)] for _ in range(D)]
    for t in range(D):
        for s1, s2, c in hs.comult[t]:
            vadd(mult[s1][s2], t, c)
    comult: list[dict] = [{} for _ in range(D)]
    for r in range(D):
        for s in range(D):
            for t, c in hs.mult[r][s]:
                vadd(comult[t], (r, s), c)
    unit_idx = dict(hs.unit)
    counit = [unit_idx.get(r, hs.zero()) for r in range(D)]
    antipode: list[dict] = [{} for _ in range(D)]
    for s in range(D):
        for r, c in hs.antipode[s]:
            vadd(antipode[r], s, c)
    unit = {r: c for r, c in enumerate(hs.counit) if c}
    return HopfStructure(
        [("*", b) for b in hs.basis],
        [[tuple(sorted(mult[r][s].items())) for s in range(D)] for r in range(D)],
        [tuple((a, b, c) for (a, b), c in sorted(comult[t].items())) for t in range(D)],
        counit,
        [tuple(sorted(antipode[r].items())) for r in range(D)],
        tuple(sorted(unit.items())),
        hs.order,
        name if name is not None else f"{hs.name}*",
    )


def tensor_product(h1: HopfStructure, h2: HopfStructure, name: str | None = None) -> HopfStructure:
    """h1 (x) h2 with componentwise structure; basis label (label1 + label2) for tuple labels."""
    D1, D2 = h1.dim, h2.dim

    def lab(a, b):
        la, lb = h1.basis[a], h2.basis[b]
        if isinstance(la, tuple) and isinstance(lb, tuple):
            return la + lb
        return (la, lb)

    basis = [lab(a, b) for a in range(D1) for b in range(D2)]
    mult = []
    for a in range(D1):
        for b in range(D2):
            row = []
            for c in range(D1):
                for d in range(D2):
                    acc: dict = {}
                    for t, x in h1.mult[a][c]:
                        for u, y in h2.mult[b][d]:
                            vadd(acc, t * D2 + u, x * y)
                    row.append(tuple(sorted(acc.items())))
            mult.append(row)
    comult = []
    for a in range(D1):
        for b in range(D2):
            acc = {}
            for s1, t1, x in h1.comult[a]:
                for s2, t2, y in h2.comult[b]:
                    vadd(acc, (s1 * D2 + s2, t1 * D2 + t2), x * y)
            comult.append(tuple((s, t, c) for (s, t), c in sorted(acc.items())))
    counit = [h1.counit[a] * h2.counit[b] for a in range(D1) for b in range(D2)]
    antipode = []
    for a in range(D1):
        for b in range(D2):
            acc = {}
            for s, x in h1.antipode[a]:
                for t, y in h2.antipode[b]:
                    vadd(acc, s * D2 + t, x * y)
            antipode.append(tuple(sorted(acc.items())))
    unit: dict = {}
    for a, x in h1.unit:
        for b, y in h2.unit:
            vadd(unit, a * D2 + b, x * y)
    return HopfStructure(
        basis, mult, comult, counit, antipode, tuple(sorted(unit.items())),
        max(h1.order, h2.order), name if name is not None else f"{h1.name}(x){h2.name}",
    )


# -- verification ---------------------------------------------------------------


@dataclass
class AxiomReport:
    """Outcome of an exhaustive residual sweep.

    ``failures`` holds (axiom id, location, residual) triples; ``checks`` counts
    how many instances of each axiom were evaluated.
    """

    subject: str = ""
    checks: dict[str, int] = field(default_factory=dict)
    failures: list[tuple[str, Any, Any]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def count(self, axiom: str, n: int = 1) -> None:
        self.checks[axiom] = self.checks.get(axiom, 0) + n

    def fail(self, axiom: str, where: Any, residual: Any) -> None:
        self.failures.append((axiom, where, residual))

    def failed_axioms(self) -> set[str]:
        return {a for a, _, _ in self.failures}

    def merge(self, other: "AxiomReport") -> "AxiomReport":
        for k, v in other.checks.items():
            self.count(k, v)
        self.failures.extend(other.failures)
        self.notes.extend(other.notes)
        return self

    def to_json(self, max_failures: int = 200) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "pass": self.passed,
            "checks": dict(sorted(self.checks.items())),
            "failure_count": len(self.failures),
            "failures": [
                {"axiom": a, "at": _jsonable(w), "residual": _jsonable(r)}
                for a, w, r in self.failures[:max_failures]
            ],
            "notes": list(self.notes),
        }


def _jsonable(x: Any) -> Any:
    if isinstance(x, CycScalar):
        return x.to_json()
    if isinstance(x, dict):
        return [[_jsonable(k), _jsonable(v)] for k, v in sorted(x.items(), key=lambda e: repr(e[0]))]
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _triples(D: int, limit: int, samples: int, seed: int) -> Iterable[tuple[int, int, int]]:
    if D <= limit:
        for a in range(D):
            for b in range(D):
                for c in range(D):
                    yield a, b, c
    else:
        rng = random.Random(seed)
        for _ in range(samples):
            yield rng.randrange(D), rng.randrange(D), rng.randrange(D)


def verify_hopf(
    hs: HopfStructure,
    *,
    triple_limit: int = DEFAULT_TRIPLE_LIMIT,
    triple_samples: int = DEFAULT_TRIPLE_SAMPLES,
    seed: int = DEFAULT_SEED,
    pairs: bool = True,
) -> AxiomReport:
    """Check every Hopf algebra axiom on basis elements, pairs and triples.

    Triples (associativity) are exhaustive up to ``triple_limit`` and a
    fixed-seed sample above it; all pairwise identities stay exhaustive.
    """
    rep = AxiomReport(hs.name)
    D = hs.dim
    mult, comult, counit = hs.mult, hs.comult, hs.counit
    one = hs.one()
    unit = hs.unit_vec()

    if hs.eps(unit) != one:
        rep.fail("unit-counit", "1", hs.eps(unit))
    rep.count("unit-counit")

    for r in range(D):
        er = {r: one}
        for side, val in (("left", hs.mul(unit, er)), ("right", hs.mul(er, unit))):
            rep.count("unit")
            if val != er:
                rep.fail("unit", (side, hs.basis[r]), vsub(val, er))

    if D > triple_limit:
        rep.notes.append(f"associativity sampled: {triple_samples} triples, seed {seed}")
    for a, b, c in _triples(D, triple_limit, triple_samples, seed):
        lhs: dict = {}
        rhs: dict = {}
        for t, x in mult[a][b]:
            for u, y in mult[t][c]:
                vadd(lhs, u, x * y)
        for t, x in mult[b][c]:
            for u, y in mult[a][t]:
                vadd(rhs, u, x * y)
        rep.count("associativity")
        if lhs != rhs:
            rep.fail("associativity", (hs.basis[a], hs.basis[b], hs.basis[c]), vsub(lhs, rhs))

    for r in range(D):
        # (Delta (x) id) Delta  vs  (id (x) Delta) Delta
        left: dict = {}
        right: dict = {}
        for s, t, c in comult[r]:
            for s1, s2, x in comult[s]:
                vadd(left, (s1, s2, t), c * x)
            for t1, t2, x in comult[t]:
                vadd(right, (s, t1, t2), c * x)
        rep.count("coassociativity")
        if left != right:
            rep.fail("coassociativity", hs.basis[r], vsub(left, right))

        er = {r: one}
        eps_left: dict = {}
        eps_right: dict = {}
        for s, t, c in comult[r]:
            vadd(eps_left, t, counit[s] * c)
            vadd(eps_right, s, counit[t] * c)
        rep.count("counit", 2)
        if eps_left != er:
            rep.fail("counit", ("left", hs.basis[r]), vsub(eps_left, er))
        if eps_right != er:
            rep.fail("counit", ("right", hs.basis[r]), vsub(eps_right, er))

        # m (S (x) id) Delta = eps 1 = m (id (x) S) Delta
        target = vscale(unit, counit[r])
        s_left: dict = {}
        s_right: dict = {}
        for s, t, c in comult[r]:
            for u, x in hs.antipode[s]:
                for w, y in mult[u][t]:
                    vadd(s_left, w, c * x * y)
            for u, x in hs.antipode[t]:
                for w, y in mult[s][u]:
                    vadd(s_right, w, c * x * y)
        rep.count("antipode", 2)
        if s_left != target:
            rep.fail("antipode", ("S*id", hs.basis[r]), vsub(s_left, target))
        if s_right != target:
            rep.fail("antipode", ("id*S", hs.basis[r]), vsub(s_right, target))

    # Delta(1) = 1 (x) 1
    d_unit = hs.comul(unit)
    uu = {(a, b): x * y for a, x in unit.items() for b, y in unit.items()}
    rep.count("comult-unit")
    if d_unit != uu:
        rep.fail("comult-unit", "1", vsub(d_unit, uu))

    if pairs:
        _check_bialgebra_pairs(hs, rep)
    return rep


def _check_bialgebra_pairs(hs: HopfStructure, rep: AxiomReport) -> None:
    D = hs.dim
    mult, comult, counit = hs.mult, hs.comult, hs.counit
    for r in range(D):
        row = mult[r]
        dr = comult[r]
        er = counit[r]
        for s in range(D):
            prod = row[s]
            # counit multiplicativity
            lhs_e = hs.zero()
            for t, c in prod:
                ct = counit[t]
                if ct:
                    lhs_e = lhs_e + c * ct
            rep.count("counit-multiplicative")
            rhs_e = er * counit[s]
            if lhs_e != rhs_e:
                rep.fail("counit-multiplicative", (hs.basis[r], hs.basis[s]), lhs_e - rhs_e)
            # Delta(rs) = Delta(r) Delta(s)
            lhs: dict = {}
            for t, c in prod:
                for a, b, x in comult[t]:
                    vadd(lhs, (a, b), c * x)
            rhs: dict = {}
            for a, b, x in dr:
                ma = mult[a]
                mb = mult[b]
                for c, d, y in comult[s]:
                    k = x * y
                    left = ma[c]
                    right = mb[d]
                    for t, x1 in left:
                        kx = k * x1
                        for u, x2 in right:
                            vadd(rhs, (t, u), kx * x2)
            rep.count("comult-multiplicative")
            if lhs != rhs:
                rep.fail("comult-multiplicative", (hs.basis[r], hs.basis[s]), vsub(lhs, rhs))


def structures_equal(h1: HopfStructure, h2: HopfStructure, ident: Mapping[int, int] | None = None) -> bool:
    """True iff every structure table of h1 matches h2 under the basis relabeling ``ident``.

    ``ident`` maps basis indices of h1 to those of h2; by default labels are matched.
    """
    if h1.dim != h2.dim:
        raise ValueError(f"dimension mismatch: {h1.dim} vs {h2.dim}")
    if ident is None:
        try:
            ident = {i: h2.index[lab] for i, lab in enumerate(h1.basis)}
        except KeyError:
            return False
    f = ident

    def vec(entries):
        return {f[t]: c for t, c in entries}

    if vec(h1.unit) != dict(h2.unit):
        return False
    for r in range(h1.dim):
        fr = f[r]
        if h1.counit[r] != h2.counit[fr]:
            return False
        if vec(h1.antipode[r]) != dict(h2.antipode[fr]):
            return False
        if {(f[s], f[t]): c for s, t, c in h1.comult[r]} != h2.comult_dict(fr):
            return False
        row1, row2 = h1.mult[r], h2.mult[fr]
        for s in range(h1.dim):
            if vec(row1[s]) != dict(row2[f[s]]):
                return False
    return True


# -- linear maps between structures ---------------------------------------------


@dataclass
class LinearMap:
    """A linear map stored by columns: ``columns[r]`` is the image of basis vector r."""

    domain: HopfStructure
    codomain: HopfStructure
    columns: list[dict]
    name: str = ""

    def __post_init__(self):
        if len(self.columns) != self.domain.dim:
            raise ValueError("column count must equal the domain dimension")
        for col in self.columns:
            for t in col:
                if not 0 <= t < self.codomain.dim:
                    raise ValueError(f"image index {t} outside the codomain")

    def apply(self, v: Mapping[int, CycScalar]) -> dict:
        out: dict = {}
        for r, a in v.items():
            for t, c in self.columns[r].items():
                vadd(out, t, a * c)
        return out

    def apply2(self, v: Mapping[tuple[int, int], CycScalar]) -> dict:
        out: dict = {}
        cols = self.columns
        for (r, s), a in v.items():
            for t, c in cols[r].items():
                ac = a * c
                for u, d in cols[s].items():
                    vadd(out, (t, u), ac * d)
        return out

    def compose(self, inner: "LinearMap") -> "LinearMap":
        """self after inner."""
        if inner.codomain.dim != self.domain.dim:
            raise ValueError("maps are not composable")
        return LinearMap(inner.domain, self.codomain, [self.apply(c) for c in inner.columns],
                         f"{self.name}.{inner.name}")

    def matrix_rank(self) -> int:
        from .linalg import bareiss_rank, columns_to_rows

        return bareiss_rank(columns_to_rows(self.columns), self.domain.dim)

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "domain": self.domain.name,
            "codomain": self.codomain.name,
            "columns": [
                [[t, c.to_json()] for t, c in sorted(col.items())] for col in self.columns
            ],
        }


def check_hopf_map(f: LinearMap, *, antipode: bool = True, pairs: Iterable[tuple[int, int]] | None = None) -> AxiomReport:
    """Direct check that ``f`` is a morphism of Hopf algebras, on all basis pairs."""
    A, B = f.domain, f.codomain
    rep = AxiomReport(f.name or "map")
    rep.count("unital")
    fu = f.apply(A.unit_vec())
    if fu != B.unit_vec():
        rep.fail("unital", "1", vsub(fu, B.unit_vec()))
    images = f.columns
    for r in range(A.dim):
        img = images[r]
        rep.count("counital")
        e = B.eps(img)
        if e != A.counit[r]:
            rep.fail("counital", A.basis[r], e - A.counit[r])
        rep.count("comultiplicative")
        lhs = B.comul(img)
        rhs = f.apply2(A.comult_dict(r))
        if lhs != rhs:
            rep.fail("comultiplicative", A.basis[r], vsub(lhs, rhs))
        if antipode:
            rep.count("antipode")
            lhs = B.S(img)
            rhs = f.apply(dict(A.antipode[r]))
            if lhs != rhs:
                rep.fail("antipode", A.basis[r], vsub(lhs, rhs))
    it = pairs if pairs is not None else ((r, s) for r in range(A.dim) for s in range(A.dim))
    for r, s in it:
        rep.count("multiplicative")
        lhs = f.apply(dict(A.mult[r][s]))
        rhs = B.mul(images[r], images[s])
        if lhs != rhs:
            rep.fail("multiplicative", (A.basis[r], A.basis[s]), vsub(lhs, rhs))
    return rep


def is_hopf_isomorphism(f: LinearMap) -> bool:
    if f.domain.dim != f.codomain.dim:
        return False
    if f.matrix_rank() != f.domain.dim:
        return False
    return check_hopf_map(f).passed
