"""Taft Hopf algebras T_{m^2}(q) on the basis h^i x^j."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Iterator, Mapping

from .cyclotomic import CycScalar, multiplicative_order, rational
from .hopf import HopfStructure, LinearMap, check_hopf_map, dual, vadd

Monomial = tuple[int, int]


@dataclass(frozen=True)
class TaftDescriptor:
    """Parameters of T_{m^2}(q); ``symbols`` name the group-like and skew-primitive generators."""

    m: int
    q: CycScalar
    symbols: tuple[str, str] = ("h", "x")

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 2:
            raise ValueError(f"Taft algebras need m >= 2, got {self.m!r}")
        if not isinstance(self.q, CycScalar):
            raise TypeError("q must be a CycScalar")
        if multiplicative_order(self.q) != self.m:
            raise ValueError(f"q = {self.q!r} is not a primitive {self.m}-th root of unity")

    @property
    def order(self) -> int:
        return self.q.order

    @property
    def dim(self) -> int:
        return self.m * self.m

    def qpow(self, k: int) -> CycScalar:
        return _qpowers(self.q, self.m)[k % self.m]

    def index(self, i: int, j: int) -> int:
        return i * self.m + j

    def monomial(self, idx: int) -> Monomial:
        return divmod(idx, self.m)

    def basis(self) -> list[Monomial]:
        return [(i, j) for i in range(self.m) for j in range(self.m)]

    def label(self, mono: Monomial) -> str:
        g, s = self.symbols
        i, j = mono
        parts = []
        if i:
            parts.append(g if i == 1 else f"{g}^{i}")
        if j:
            parts.append(s if j == 1 else f"{s}^{j}")
        return "".join(parts) or "1"

    def to_json(self) -> dict[str, Any]:
        return {"m": self.m, "q": self.q.to_json()}


@lru_cache(maxsize=None)
def _qpowers(q: CycScalar, m: int) -> tuple[CycScalar, ...]:
    out = [CycScalar.one(q.order)]
    for _ in range(m - 1):
        out.append(out[-1] * q)
    return tuple(out)


def _prune(coeffs: Mapping) -> dict:
    return {k: c for k, c in coeffs.items() if c}


@dataclass
class TaftElement:
    descriptor: TaftDescriptor
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        m = self.descriptor.m
        clean = {}
        for (i, j), c in self.coeffs.items():
            if not (0 <= i < m and 0 <= j < m):
                raise ValueError(f"exponent pair {(i, j)} outside 0..{m - 1}")
            c = _scalar(c, self.descriptor.order)
            if c:
                clean[(i, j)] = c
        self.coeffs = clean

    # constructors
    @classmethod
    def monomial(cls, d: TaftDescriptor, i: int, j: int, c=1) -> "TaftElement":
        return cls(d, {(i % d.m, j): c}) if j < d.m else cls(d, {})

    @classmethod
    def one(cls, d: TaftDescriptor) -> "TaftElement":
        return cls.monomial(d, 0, 0)

    @classmethod
    def gen_group(cls, d: TaftDescriptor) -> "TaftElement":
        return cls.monomial(d, 1, 0)

    @classmethod
    def gen_skew(cls, d: TaftDescriptor) -> "TaftElement":
        return cls.monomial(d, 0, 1)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, TaftElement):
            return NotImplemented
        return self.descriptor == other.descriptor and self.coeffs == other.coeffs

    def __add__(self, other: "TaftElement") -> "TaftElement":
        _same(self.descriptor, other.descriptor)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            vadd(out, k, c)
        return TaftElement(self.descriptor, out)

    def __neg__(self) -> "TaftElement":
        return TaftElement(self.descriptor, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: "TaftElement") -> "TaftElement":
        return self + (-other)

    def scale(self, c) -> "TaftElement":
        c = _scalar(c, self.descriptor.order)
        return TaftElement(self.descriptor, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, TaftElement):
            return taft_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> "TaftElement":
        out = TaftElement.one(self.descriptor)
        for _ in range(k):
            out = out * self
        return out

    def to_vector(self) -> dict[int, CycScalar]:
        d = self.descriptor
        return {d.index(i, j): c for (i, j), c in self.coeffs.items()}

    @classmethod
    def from_vector(cls, d: TaftDescriptor, v: Mapping[int, CycScalar]) -> "TaftElement":
        return cls(d, {d.monomial(r): c for r, c in v.items()})

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c!r})*{self.descriptor.label(k)}" for k, c in sorted(self.coeffs.items()))

    def to_json(self) -> dict[str, Any]:
        return {
            "m": self.descriptor.m,
            "q": self.descriptor.q.to_json(),
            "terms": [{"i": i, "j": j, "c": c.to_json()} for (i, j), c in sorted(self.coeffs.items())],
        }


@dataclass
class TensorElement:
    left: TaftDescriptor
    right: TaftDescriptor
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = _prune(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (self.left, self.right) == (other.left, other.right) and self.coeffs == other.coeffs

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        _same(self.left, other.left)
        _same(self.right, other.right)
        out: dict = {}
        for (a, b), c1 in self.coeffs.items():
            for (c, d), c2 in other.coeffs.items():
                k = c1 * c2
                for t, x in _mono_mul(self.left, a, c):
                    for u, y in _mono_mul(self.right, b, d):
                        vadd(out, (t, u), k * x * y)
        return TensorElement(self.left, self.right, out)

    @classmethod
    def pure(cls, a: TaftElement, b: TaftElement) -> "TensorElement":
        return cls(a.descriptor, b.descriptor,
                   {(k1, k2): c1 * c2 for k1, c1 in a.coeffs.items() for k2, c2 in b.coeffs.items()})

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"({c!r})*{self.left.label(a)}(x){self.right.label(b)}"
            for (a, b), c in sorted(self.coeffs.items())
        )


@dataclass
class DualElement:
    """The functional sum c_ij (h^i x^j)^* on a Taft algebra."""

    descriptor: TaftDescriptor
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = _prune(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, DualElement):
            return NotImplemented
        return self.descriptor == other.descriptor and self.coeffs == other.coeffs

    def __call__(self, a: TaftElement) -> CycScalar:
        acc = CycScalar.zero(self.descriptor.order)
        for k, c in a.coeffs.items():
            f = self.coeffs.get(k)
            if f is not None:
                acc = acc + f * c
        return acc

    def to_vector(self) -> dict[int, CycScalar]:
        d = self.descriptor
        return {d.index(i, j): c for (i, j), c in self.coeffs.items()}

    @classmethod
    def from_vector(cls, d: TaftDescriptor, v: Mapping[int, CycScalar]) -> "DualElement":
        return cls(d, {d.monomial(r): c for r, c in v.items()})


def _scalar(c, order: int) -> CycScalar:
    if isinstance(c, CycScalar):
        return c
    return rational(c, order)


def _same(a: TaftDescriptor, b: TaftDescriptor) -> None:
    if a != b:
        raise ValueError("elements belong to different Taft algebras")


@lru_cache(maxsize=None)
def _mono_mul_table(d: TaftDescriptor) -> tuple:
    m = d.m
    table = []
    for i in range(m):
        for j in range(m):
            row = []
            for k in range(m):
                for l in range(m):
                    if j + l >= m:
                        row.append(())
                    else:
                        row.append(((((i + k) % m, j + l), d.qpow(j * k)),))
            table.append(tuple(row))
    return tuple(table)


def _mono_mul(d: TaftDescriptor, a: Monomial, b: Monomial):
    return _mono_mul_table(d)[a[0] * d.m + a[1]][b[0] * d.m + b[1]]


def taft_multiply(a: TaftElement, b: TaftElement) -> TaftElement:
    """Product from (h^i x^j)(h^k x^l) = q^{jk} h^{i+k} x^{j+l} (zero once j+l >= m)."""
    _same(a.descriptor, b.descriptor)
    d = a.descriptor
    out: dict = {}
    for ka, ca in a.coeffs.items():
        for kb, cb in b.coeffs.items():
            for t, c in _mono_mul(d, ka, kb):
                vadd(out, t, ca * cb * c)
    return TaftElement(d, out)


@lru_cache(maxsize=None)
def _comult_basis(d: TaftDescriptor, i: int, j: int) -> TensorElement:
    one = CycScalar.one(d.order)
    dh = TensorElement(d, d, {((1, 0), (1, 0)): one})
    dx = TensorElement(d, d, {((0, 1), (1, 0)): one, ((0, 0), (0, 1)): one})
    if i == 0 and j == 0:
        return TensorElement(d, d, {((0, 0), (0, 0)): one})
    if j > 0:
        return _comult_basis(d, i, j - 1) * dx
    return _comult_basis(d, i - 1, 0) * dh


def taft_comultiply(a: TaftElement) -> TensorElement:
    """Coproduct by powering Delta(h) = h(x)h and Delta(x) = x(x)h + 1(x)x in the tensor square."""
    d = a.descriptor
    out: dict = {}
    for (i, j), c in a.coeffs.items():
        for k, v in _comult_basis(d, i, j).coeffs.items():
            vadd(out, k, c * v)
    return TensorElement(d, d, out)


def taft_counit(a: TaftElement) -> CycScalar:
    acc = CycScalar.zero(a.descriptor.order)
    for (_, j), c in a.coeffs.items():
        if j == 0:
            acc = acc + c
    return acc


@lru_cache(maxsize=None)
def _antipode_basis(d: TaftDescriptor, i: int, j: int) -> TaftElement:
    # S(h^i x^j) = S(x)^j S(h)^i with S(h) = h^{m-1}, S(x) = -x h^{m-1}
    s_h = TaftElement.monomial(d, d.m - 1, 0)
    s_x = -(TaftElement.gen_skew(d) * s_h)
    return (s_x ** j) * (s_h ** i)


def taft_antipode(a: TaftElement) -> TaftElement:
    d = a.descriptor
    out: dict = {}
    for (i, j), c in a.coeffs.items():
        for k, v in _antipode_basis(d, i, j).coeffs.items():
            vadd(out, k, c * v)
    return TaftElement(d, out)


def group_likes(d: TaftDescriptor) -> list[TaftElement]:
    return [TaftElement.monomial(d, i, 0) for i in range(d.m)]


def skew_primitives(d: TaftDescriptor, j: int) -> list[TaftElement]:
    """Spanning set of the (h^j, 1)-skew-primitives: h^j - 1, plus x when j = 1."""
    if not 0 <= j < d.m:
        raise ValueError(f"exponent {j} outside 0..{d.m - 1}")
    base = TaftElement.monomial(d, j, 0) - TaftElement.one(d)
    if j == 1:
        return [base, TaftElement.gen_skew(d)]
    return [base]


@lru_cache(maxsize=None)
def taft_structure(d: TaftDescriptor, name: str | None = None) -> HopfStructure:
    """Structure constants of T_{m^2}(q) on the basis index i*m + j."""
    basis = d.basis()
    D = len(basis)
    table = _mono_mul_table(d)
    mult = [[tuple((d.index(*t), c) for t, c in table[r][s]) for s in range(D)] for r in range(D)]
    comult = []
    antipode = []
    for i, j in basis:
        dc = _comult_basis(d, i, j).coeffs
        comult.append(tuple((d.index(*a), d.index(*b), c) for (a, b), c in sorted(dc.items())))
        sc = _antipode_basis(d, i, j).coeffs
        antipode.append(tuple((d.index(*k), c) for k, c in sorted(sc.items())))
    one = CycScalar.one(d.order)
    zero = CycScalar.zero(d.order)
    counit = [one if j == 0 else zero for _, j in basis]
    g, s = d.symbols
    label = name if name is not None else f"T_{d.m}^2({d.q!r})[{g},{s}]"
    return HopfStructure(basis, mult, comult, counit, antipode, ((0, one),), d.order, label)


# -- the dual algebra ------------------------------------------------------------------


@dataclass
class TaftDual:
    """T* built by transposition, with the generators h*, x* and the isomorphism T -> T*."""

    descriptor: TaftDescriptor
    structure: HopfStructure
    h_star: DualElement
    x_star: DualElement
    psi: LinearMap

    def evaluate(self, f: DualElement, a: TaftElement) -> CycScalar:
        return f(a)

    def multiply(self, f: DualElement, g: DualElement) -> DualElement:
        return DualElement.from_vector(self.descriptor, self.structure.mul(f.to_vector(), g.to_vector()))

    def psi_of(self, a: TaftElement) -> DualElement:
        return DualElement.from_vector(self.descriptor, self.psi.apply(a.to_vector()))

    def pairing_matrix(self) -> list[list[CycScalar]]:
        d = self.descriptor
        rows = []
        for r in range(d.dim):
            f = DualElement(d, {d.monomial(r): CycScalar.one(d.order)})
            rows.append([f(TaftElement(d, {d.monomial(s): 1})) for s in range(d.dim)])
        return rows


@lru_cache(maxsize=None)
def taft_dual(d: TaftDescriptor) -> TaftDual:
    T = taft_structure(d)
    Tstar = dual(T, name=f"{T.name}*")
    one = CycScalar.one(d.order)
    h_star = DualElement(d, {(i, 0): d.qpow(i) for i in range(d.m)})
    x_star = DualElement(d, {(i, 1): one for i in range(d.m)})
    hv, xv = h_star.to_vector(), x_star.to_vector()
    # psi(h^i x^j) = (h*)^i (x*)^j
    h_pows = [Tstar.unit_vec()]
    for _ in range(d.m - 1):
        h_pows.append(Tstar.mul(h_pows[-1], hv))
    cols = []
    for i, j in d.basis():
        v = h_pows[i]
        for _ in range(j):
            v = Tstar.mul(v, xv)
        cols.append(v)
    psi = LinearMap(T, Tstar, cols, "psi")
    return TaftDual(d, Tstar, h_star, x_star, psi)


def cop_target(d: TaftDescriptor) -> TaftDescriptor:
    """Descriptor of T_{m^2}(q^{m-1}) on the same generator names."""
    return TaftDescriptor(d.m, d.qpow(d.m - 1), d.symbols)


def cop_structure(d: TaftDescriptor) -> HopfStructure:
    from .hopf import cop

    return cop(taft_structure(d), name=f"{taft_structure(d).name}^cop")


def antipode_iso_columns(d: TaftDescriptor) -> list[dict[int, CycScalar]]:
    """Columns of T(q)^cop -> T(q^{m-1}), h -> h^{-1}, x -> -q^{-1} h^{-1} x, extended multiplicatively."""
    t = cop_target(d)
    T2 = taft_structure(t)
    m = d.m
    hv = {t.index(m - 1, 0): CycScalar.one(d.order)}
    xv = {t.index(m - 1, 1): -d.qpow(m - 1)}
    h_pows = [T2.unit_vec()]
    for _ in range(m - 1):
        h_pows.append(T2.mul(h_pows[-1], hv))
    cols = []
    for i, j in d.basis():
        v = h_pows[i]
        for _ in range(j):
            v = T2.mul(v, xv)
        cols.append(v)
    return cols


@dataclass
class StructuralIsos:
    psi: LinearMap
    antipode_map: LinearMap
    psi_report: Any
    antipode_report: Any

    @property
    def verified(self) -> bool:
        return (
            self.psi_report.passed and self.antipode_report.passed
            and self.psi.matrix_rank() == self.psi.domain.dim
            and self.antipode_map.matrix_rank() == self.antipode_map.domain.dim
        )


def structural_isos(d: TaftDescriptor) -> StructuralIsos:
    """The isomorphisms T -> T* and T(q)^cop -> T(q^{m-1}), each checked as a Hopf map."""
    dual_data = taft_dual(d)
    psi = dual_data.psi
    smap = LinearMap(cop_structure(d), taft_structure(cop_target(d)), antipode_iso_columns(d), "S-iso")
    return StructuralIsos(psi, smap, check_hopf_map(psi), check_hopf_map(smap))


def iter_basis(d: TaftDescriptor) -> Iterator[TaftElement]:
    for i, j in d.basis():
        yield TaftElement.monomial(d, i, j)
