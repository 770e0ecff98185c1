"""Quaternions over an exact scalar ring.

One multiplication routine serves both rational quaternions (the Hurwitz
order, the binary tetrahedral group 2.A4) and quaternions over Q(sqrt5)
(the icosians, the binary icosahedral group 2.A5).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .exact import SIGMA, TAU, Q, QuadExt5, format_scalar, scalar_key
from .groups import ClosureCapExceeded, closure


@dataclass(frozen=True)
class Quaternion:
    """``x0 + x1 i + x2 j + x3 k``; coefficients are Fraction or QuadExt5."""

    x0: object = Fraction(0)
    x1: object = Fraction(0)
    x2: object = Fraction(0)
    x3: object = Fraction(0)

    @classmethod
    def of(cls, *coeffs, scale=1) -> "Quaternion":
        s = coeffs if len(coeffs) == 4 else tuple(coeffs[0])
        c = Q(scale) if not isinstance(scale, QuadExt5) else scale
        return cls(*(_scalar(x) * c for x in s))

    @property
    def coeffs(self) -> tuple:
        return (self.x0, self.x1, self.x2, self.x3)

    def __mul__(self, other):
        if not isinstance(other, Quaternion):
            return Quaternion(*(x * other for x in self.coeffs))
        return quat_mul(self, other)

    def __rmul__(self, other):
        return Quaternion(*(other * x for x in self.coeffs))

    def __add__(self, other):
        return Quaternion(*(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return Quaternion(*(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return Quaternion(*(-a for a in self.coeffs))

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("use explicit inverses for negative powers")
        result = ONE
        for _ in range(k):
            result = quat_mul(result, self)
        return result

    def key(self) -> tuple:
        return tuple(scalar_key(x) for x in self.coeffs)

    def __str__(self):
        a, b, c, d = (format_scalar(x) for x in self.coeffs)
        return f"{a} + {b}*i + {c}*j + {d}*k"


def _scalar(x):
    return x if isinstance(x, QuadExt5) else Q(x)


def quat_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    a0, a1, a2, a3 = a.coeffs
    b0, b1, b2, b3 = b.coeffs
    return Quaternion(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def quat_conj(z: Quaternion) -> Quaternion:
    return Quaternion(z.x0, -z.x1, -z.x2, -z.x3)


def quat_norm(z: Quaternion):
    return z.x0 * z.x0 + z.x1 * z.x1 + z.x2 * z.x2 + z.x3 * z.x3


def is_hurwitz(z: Quaternion) -> bool:
    cs = [Q(x) for x in z.coeffs]
    return all(c.denominator == 1 for c in cs) or all(c.denominator == 2 for c in cs)


ONE = Quaternion.of(1, 0, 0, 0)
I = Quaternion.of(0, 1, 0, 0)
J = Quaternion.of(0, 0, 1, 0)
K = Quaternion.of(0, 0, 0, 1)
OMEGA = Quaternion.of(1, 1, 1, 1, scale=Fraction(1, 2))
OMEGA_MINUS = Quaternion.of(-1, 1, 1, 1, scale=Fraction(1, 2))

# Left-regular images of i, j, k as printed; rho4 extends them linearly.
RHO_I = linalg.mat([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
RHO_J = linalg.mat([[0, 0, 1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, 1, 0, 0]])
RHO_K = linalg.mat([[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]])


def rho4(z: Quaternion) -> linalg.Matrix:
    basis = (linalg.identity(4), RHO_I, RHO_J, RHO_K)
    out = linalg.zeros(4)
    for c, m in zip(z.coeffs, basis):
        out = linalg.add(out, linalg.scale(m, c))
    return out


def unit_group_2A4(generator: Quaternion = OMEGA_MINUS, cap: int = 10**6) -> list[Quaternion]:
    """Closure of i, j, k and ``generator`` (default (-1+i+j+k)/2)."""
    return closure([I, J, K, generator], mul=quat_mul, key=Quaternion.key, cap=cap)


HURWITZ_UNIT_VECTORS = tuple(
    tuple(Fraction(x, 2) for x in v)
    for v in [
        (2, 0, 0, 0), (-2, 0, 0, 0), (0, 0, 0, 2), (0, 0, 0, -2),
        (0, 0, 2, 0), (0, 0, -2, 0), (0, -2, 0, 0), (0, 2, 0, 0),
        (-1, -1, -1, -1), (1, 1, 1, 1), (1, -1, 1, -1), (-1, 1, -1, 1),
        (1, 1, -1, -1), (-1, -1, 1, 1), (-1, 1, 1, -1), (1, -1, -1, 1),
        (-1, 1, 1, 1), (1, -1, -1, -1), (-1, 1, -1, -1), (1, -1, 1, 1),
        (-1, -1, -1, 1), (1, 1, 1, -1), (1, 1, -1, 1), (-1, -1, 1, -1),
    ]
)


# --- icosians -------------------------------------------------------------

def _q5(x) -> QuadExt5:
    return QuadExt5.coerce(x)


def icosian(z: Quaternion) -> Quaternion:
    """Lift a quaternion's coefficients into Q(sqrt5)."""
    return Quaternion(*(_q5(c) for c in z.coeffs))


ICOSIAN_X = Quaternion(_q5(0), _q5(Fraction(1, 2)), SIGMA * Fraction(1, 2), TAU * Fraction(1, 2))


def icosian_generators() -> list[Quaternion]:
    return [icosian(I), icosian(J), icosian(K), icosian(OMEGA), ICOSIAN_X]


def icosian_group(cap: int = 10**6) -> list[Quaternion]:
    return closure(icosian_generators(), mul=quat_mul, key=Quaternion.key, cap=cap)


def icosian_F(v: Quaternion) -> tuple[Fraction, ...]:
    """Map a + b sqrt5 to a + b in each coefficient."""
    out = []
    for c in v.coeffs:
        c = _q5(c)
        out.append(c.rat + c.root5)
    return tuple(out)


def e8_embed(v: Quaternion) -> tuple[Fraction, ...]:
    v = icosian(v) if not isinstance(v.x0, QuadExt5) else v
    return icosian_F(v) + icosian_F(SIGMA * v)


def group_to_json(elements) -> list[list[str]]:
    return [[format_scalar(c) for c in z.coeffs] for z in elements]
