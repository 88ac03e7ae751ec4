from __future__ import annotations

import cmath
from fractions import Fraction

import pytest

from taft_bicross.cyclotomic import CycScalar, root_of_unity


def to_complex(c: CycScalar) -> complex:
    """Numerical image of an exact scalar under zeta_L -> exp(2 pi i / L)."""
    z = cmath.exp(2j * cmath.pi / c.order)
    return sum(float(a) * z ** k for k, a in enumerate(c.coeffs))


def close(a: complex, b: complex, tol: float = 1e-9) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def frac(x) -> Fraction:
    return Fraction(x)


@pytest.fixture
def z3() -> CycScalar:
    return root_of_unity(3, 1)


@pytest.fixture
def z4() -> CycScalar:
    return root_of_unity(4, 1)
