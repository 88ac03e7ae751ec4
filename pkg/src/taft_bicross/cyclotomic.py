"""Exact arithmetic in the cyclotomic fields Q(zeta_L).

An element is stored as a polynomial in zeta_L of degree < phi(L), reduced
modulo the L-th cyclotomic polynomial, with integer numerators over a single
positive common denominator.  Instances are interned: two scalars of the same
order are equal iff they are the same object, which keeps equality, hashing and
the product/sum memo tables cheap during large verification sweeps.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]

__all__ = [
    "CycScalar",
    "cyclotomic_polynomial",
    "root_of_unity",
    "field_arith",
    "multiplicative_order",
    "roots_of_unity_group",
    "rational",
    "common_order",
]


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _euler_phi(n: int) -> int:
    result, p, m = n, 2, n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _mobius(n: int) -> int:
    sign, p, m = 1, 2, n
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            sign = -sign
        p += 1
    if m > 1:
        sign = -sign
    return sign


def _poly_divexact(num: list[int], den: Sequence[int]) -> list[int]:
    # den is monic; remainder must vanish
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        out[k - dn] = c
        if c:
            for t, dc in enumerate(den):
                num[k - dn + t] -= c * dc
    if any(num[:dn]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_N, lowest degree first.

    Obtained by dividing x^N - 1 by Phi_d for every proper divisor d of N.
    """
    if N < 1:
        raise ValueError("cyclotomic_polynomial needs N >= 1")
    poly = [-1] + [0] * (N - 1) + [1]
    for d in _divisors(N)[:-1]:
        poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class _Field:
    """Precomputed reduction data for Q(zeta_L)."""

    __slots__ = ("order", "phi", "modulus", "powers", "trace", "zero", "one")

    def __init__(self, order: int):
        self.order = order
        self.modulus = cyclotomic_polynomial(order)
        phi = len(self.modulus) - 1
        self.phi = phi
        # powers[k] = x^k mod Phi_L, for every k that a product or an embedding can produce
        top = max(order, 2 * phi - 1)
        powers = []
        cur = [0] * phi
        cur[0] = 1
        for _ in range(top):
            powers.append(tuple(cur))
            lead = cur[-1]
            cur = [0] + cur[:-1]
            if lead:
                for t in range(phi):
                    cur[t] -= lead * self.modulus[t]
        self.powers = tuple(powers)
        # trace of zeta^k is the Ramanujan sum c_L(k)
        tr = []
        for k in range(phi):
            g = math.gcd(k, order)
            r = order // g
            tr.append(_mobius(r) * phi // _euler_phi(r))
        self.trace = tuple(tr)
        self.zero = None
        self.one = None


_FIELDS: dict[int, _Field] = {}
_INTERN: dict[tuple, "CycScalar"] = {}
_MUL: dict[int, "CycScalar"] = {}
_ADD: dict[int, "CycScalar"] = {}
_LOCK = threading.RLock()
_MEMO_CAP = 4_000_000


def _field(order: int) -> _Field:
    f = _FIELDS.get(order)
    if f is None:
        if order < 1:
            raise ValueError("field order must be positive")
        with _LOCK:
            f = _FIELDS.get(order)
            if f is None:
                f = _Field(order)
                f.zero = _intern(f, (0,) * f.phi, 1)
                f.one = _intern(f, (1,) + (0,) * (f.phi - 1), 1)
                _FIELDS[order] = f
    return f


def _intern(field: _Field, nums: tuple, den: int) -> "CycScalar":
    key = (field.order, den, nums)
    obj = _INTERN.get(key)
    if obj is not None:
        return obj
    with _LOCK:
        obj = _INTERN.get(key)
        if obj is None:
            obj = object.__new__(CycScalar)
            obj.order = field.order
            obj._f = field
            obj._nums = nums
            obj._den = den
            obj._id = len(_INTERN)
            obj._zero = not any(nums)
            obj._neg = None
            obj._inv = None
            trace = sum(a * t for a, t in zip(nums, field.trace))
            obj._hash = hash(Fraction(trace, den * field.phi))
            _INTERN[key] = obj
    return obj


def _normalize(field: _Field, nums: list[int], den: int) -> "CycScalar":
    if den < 0:
        nums = [-a for a in nums]
        den = -den
    g = math.gcd(den, *nums)
    if g != 1:
        nums = [a // g for a in nums]
        den //= g
    return _intern(field, tuple(nums), den)


def _reduce(field: _Field, poly: Sequence[int], den: int) -> "CycScalar":
    """Reduce sum(poly[k] x^k)/den modulo Phi_L, using x^L = 1 first."""
    phi, L = field.phi, field.order
    out = [0] * phi
    for k, c in enumerate(poly):
        if c:
            if k >= len(field.powers):
                k %= L
            for t, r in enumerate(field.powers[k]):
                if r:
                    out[t] += c * r
    return _normalize(field, out, den)


def common_order(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


class CycScalar:
    """An element of Q(zeta_L), canonically reduced and interned.

    ``CycScalar(L, coeffs)`` builds sum(coeffs[k] * zeta_L**k); ``coeffs`` may
    be longer than phi(L) and is reduced.  Mixed-order arithmetic embeds both
    operands into Q(zeta_lcm).
    """

    __slots__ = ("order", "_f", "_nums", "_den", "_id", "_zero", "_neg", "_inv", "_hash")

    def __new__(cls, order: int, coeffs: Iterable[Rational | str] = ()):
        field = _field(order)
        fr = [Fraction(c) for c in coeffs]
        if not fr:
            return field.zero
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        poly = [int(c * den) for c in fr]
        return _reduce(field, poly, den)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_rational(cls, value: Rational | str, order: int = 1) -> "CycScalar":
        field = _field(order)
        v = Fraction(value)
        nums = [0] * field.phi
        nums[0] = v.numerator
        return _normalize(field, nums, v.denominator)

    @classmethod
    def zero(cls, order: int = 1) -> "CycScalar":
        return _field(order).zero

    @classmethod
    def one(cls, order: int = 1) -> "CycScalar":
        return _field(order).one

    # -- inspection -----------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(a, self._den) for a in self._nums)

    @property
    def numerators(self) -> tuple[int, ...]:
        return self._nums

    @property
    def denominator(self) -> int:
        return self._den

    def is_zero(self) -> bool:
        return self._zero

    def is_one(self) -> bool:
        return self is self._f.one

    def __bool__(self) -> bool:
        return not self._zero

    def is_rational(self) -> bool:
        return not any(self._nums[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self._nums[0], self._den)

    def embed(self, order: int) -> "CycScalar":
        """Image of self in Q(zeta_order); requires self.order | order."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot embed order {self.order} into order {order}")
        step = order // self.order
        poly = [0] * ((len(self._nums) - 1) * step + 1)
        for k, a in enumerate(self._nums):
            poly[k * step] = a
        return _reduce(_field(order), poly, self._den)

    # -- coercion -------------------------------------------------------------

    def _coerce(self, other) -> tuple["CycScalar", "CycScalar"]:
        if isinstance(other, CycScalar):
            if other.order == self.order:
                return self, other
            L = common_order(self.order, other.order)
            return self.embed(L), other.embed(L)
        if isinstance(other, (int, Fraction)):
            return self, CycScalar.from_rational(other, self.order)
        raise TypeError(f"cannot combine CycScalar with {type(other).__name__}")

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        if a._zero:
            return b
        if b._zero:
            return a
        key = (a._id << 32) | b._id
        r = _ADD.get(key)
        if r is None:
            if a._den == b._den:
                nums = [x + y for x, y in zip(a._nums, b._nums)]
                r = _normalize(a._f, nums, a._den)
            else:
                da, db = a._den, b._den
                nums = [x * db + y * da for x, y in zip(a._nums, b._nums)]
                r = _normalize(a._f, nums, da * db)
            if len(_ADD) > _MEMO_CAP:
                _ADD.clear()
            _ADD[key] = r
            _ADD[(b._id << 32) | a._id] = r
        return r

    __radd__ = __add__

    def __neg__(self):
        r = self._neg
        if r is None:
            r = _intern(self._f, tuple(-a for a in self._nums), self._den)
            self._neg = r
        return r

    def __sub__(self, other):
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return b + (-a)

    def __mul__(self, other):
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        f = a._f
        if a._zero or b is f.one:
            return a
        if b._zero or a is f.one:
            return b
        key = (a._id << 32) | b._id
        r = _MUL.get(key)
        if r is None:
            an, bn = a._nums, b._nums
            phi = f.phi
            prod = [0] * (2 * phi - 1)
            for i, x in enumerate(an):
                if x:
                    for j, y in enumerate(bn):
                        if y:
                            prod[i + j] += x * y
            r = _reduce(f, prod, a._den * b._den)
            if len(_MUL) > _MEMO_CAP:
                _MUL.clear()
            _MUL[key] = r
            _MUL[(b._id << 32) | a._id] = r
        return r

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        """Multiplicative inverse through the extended gcd with Phi_L."""
        if self._zero:
            raise ZeroDivisionError("inverse of zero in Q(zeta_L)")
        r = self._inv
        if r is None:
            r = _ext_gcd_inverse(self)
            self._inv = r
            r._inv = self
        return r

    def __truediv__(self, other):
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other):
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return b * a.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        result = self._f.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if isinstance(other, CycScalar):
            if other.order == self.order:
                return False
            a, b = self._coerce(other)
            return a is b
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self._nums[0], self._den) == other
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return self._hash

    def __reduce__(self):
        return (CycScalar, (self.order, self.coeffs))

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                z = f"z{self.order}" + (f"^{k}" if k > 1 else "")
                terms.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"

    # -- serialization --------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [[str(c.numerator), str(c.denominator)] for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "CycScalar":
        return cls(int(doc["order"]), [Fraction(int(n), int(d)) for n, d in doc["coeffs"]])


def _pdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and any(a):
        c = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = c
        for t, bc in enumerate(b):
            a[shift + t] -= c * bc
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _ext_gcd_inverse(x: CycScalar) -> CycScalar:
    f = x._f
    a = [Fraction(c) for c in f.modulus]
    b = list(x.coeffs)
    while b and b[-1] == 0:
        b.pop()
    # invariant: s_b * x == b (mod Phi_L)
    s_a: list[Fraction] = [Fraction(0)]
    s_b: list[Fraction] = [Fraction(1)]
    while len(b) > 1:
        q, r = _pdivmod(a, b)
        prod = [Fraction(0)] * (len(q) + len(s_b))
        for i, qi in enumerate(q):
            for j, sj in enumerate(s_b):
                prod[i + j] += qi * sj
        s_new = [Fraction(0)] * max(len(s_a), len(prod))
        for i, c in enumerate(s_a):
            s_new[i] += c
        for i, c in enumerate(prod):
            s_new[i] -= c
        a, b = b, r
        s_a, s_b = s_b, s_new
        while b and b[-1] == 0:
            b.pop()
        if not b:
            raise ArithmeticError("non-invertible element: modulus is not irreducible?")
    c = b[0]
    coeffs = [s / c for s in s_b]
    return CycScalar(f.order, coeffs)


def rational(value: Rational | str, order: int = 1) -> CycScalar:
    return CycScalar.from_rational(value, order)


def root_of_unity(L: int, k: int) -> CycScalar:
    """zeta_L ** (k mod L)."""
    f = _field(L)
    return _intern(f, f.powers[k % L], 1)


def field_arith(op: str, a: CycScalar, b: CycScalar | None = None) -> CycScalar:
    if op == "add":
        return a + b
    if op == "negate":
        return -a
    if op == "multiply":
        return a * b
    if op == "invert":
        return a.inverse()
    raise ValueError(f"unknown field operation {op!r}")


def multiplicative_order(a: CycScalar) -> int | None:
    """Smallest t >= 1 with a**t == 1, or None when a is not a root of unity.

    Roots of unity in Q(zeta_L) have order dividing lcm(2, L).
    """
    if a.is_zero():
        raise ZeroDivisionError("zero has no multiplicative order")
    bound = common_order(2, a.order)
    one = a._f.one
    p = a
    for t in range(1, bound + 1):
        if p is one:
            return t
        p = p * a
    return None


def roots_of_unity_group(d: int, L: int) -> list[CycScalar]:
    """U_d inside Q(zeta_L), listed as zeta_L**((L/d)*j) for j = 0..d-1."""
    if d < 1 or L % d:
        raise ValueError(f"d={d} does not divide the ambient order L={L}")
    step = L // d
    return [root_of_unity(L, step * j) for j in range(d)]
