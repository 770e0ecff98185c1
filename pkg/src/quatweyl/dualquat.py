"""The group ring of two commuting quaternion groups ("dual quaternions").

An element is a 4x4 coefficient array ``a[m][n]`` over the basis
``P_m * I_n`` with ``P = (1, p, q, r)`` and ``I = (1, i, j, k)``.  The two
factors commute, so a product of basis elements is the product of the
``P`` parts times the product of the ``I`` parts, each with its own
quaternion sign.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .exact import Q
from .quat import RHO_I, RHO_J, RHO_K

# unit quaternion basis product: e_a * e_b = SIGN[a][b] * e_{INDEX[a][b]}
_QINDEX = ((0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0))
_QSIGN = ((1, 1, 1, 1), (1, -1, 1, -1), (1, -1, -1, 1), (1, 1, -1, -1))

# flat basis index 4*m + n; _MUL[s][t] = (target index, sign)
_MUL = tuple(
    tuple(
        (4 * _QINDEX[s // 4][t // 4] + _QINDEX[s % 4][t % 4],
         _QSIGN[s // 4][t // 4] * _QSIGN[s % 4][t % 4])
        for t in range(16)
    )
    for s in range(16)
)

PQR_NAMES = ("", "p", "q", "r")
IJK_NAMES = ("", "i", "j", "k")


@dataclass(frozen=True)
class DualQuatElem:
    """Flat row-major coefficients: ``coeffs[4*m + n]`` multiplies ``P_m I_n``."""

    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != 16:
            raise ValueError("a dual-quaternion element has 16 coefficients")
        object.__setattr__(self, "coeffs", tuple(Q(c) for c in self.coeffs))

    @classmethod
    def from_array(cls, a: Sequence[Sequence]) -> "DualQuatElem":
        return cls(tuple(a[m][n] for m in range(4) for n in range(4)))

    @classmethod
    def basis(cls, m: int, n: int) -> "DualQuatElem":
        c = [0] * 16
        c[4 * m + n] = 1
        return cls(tuple(c))

    @classmethod
    def scalar(cls, s) -> "DualQuatElem":
        return cls((s,) + (0,) * 15)

    def coeff(self, m: int, n: int) -> Fraction:
        return self.coeffs[4 * m + n]

    def array(self) -> tuple:
        return tuple(self.coeffs[4 * m: 4 * m + 4] for m in range(4))

    def __mul__(self, other):
        if isinstance(other, DualQuatElem):
            return dq_mul(self, other)
        return DualQuatElem(tuple(c * other for c in self.coeffs))

    def __rmul__(self, other):
        return DualQuatElem(tuple(other * c for c in self.coeffs))

    def __add__(self, other):
        return DualQuatElem(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return DualQuatElem(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return DualQuatElem(tuple(-a for a in self.coeffs))

    def is_scalar(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def in_quarter_integers(self) -> bool:
        """Every coefficient lies in (1/4)Z."""
        return all(4 % c.denominator == 0 for c in self.coeffs)

    def __str__(self):
        terms = []
        for idx, c in enumerate(self.coeffs):
            if c == 0:
                continue
            name = IJK_NAMES[idx % 4] + PQR_NAMES[idx // 4]
            mag = abs(c)
            body = (f"{mag}*{name}" if mag != 1 else name) if name else str(mag)
            terms.append(("- " if c < 0 else "+ ") + body)
        if not terms:
            return "0"
        text = " ".join(terms)
        return text[2:] if text.startswith("+") else "-" + text[1:]


def dq_mul(a: DualQuatElem, b: DualQuatElem) -> DualQuatElem:
    out = [Fraction(0)] * 16
    bc = b.coeffs
    for s, x in enumerate(a.coeffs):
        if not x:
            continue
        row = _MUL[s]
        for t, y in enumerate(bc):
            if y:
                idx, sign = row[t]
                out[idx] += sign * x * y
    return DualQuatElem(tuple(out))


def dq_conj(x: DualQuatElem) -> DualQuatElem:
    """Group-ring conjugation: the basis element P_m I_n goes to its inverse.

    (P I)^-1 = P^-1 I^-1, which is +P I when both factors are imaginary or
    both are 1, and -P I when exactly one of them is imaginary.
    """
    out = []
    for idx, c in enumerate(x.coeffs):
        m, n = divmod(idx, 4)
        out.append(-c if (m == 0) != (n == 0) else c)
    return DualQuatElem(tuple(out))


def dq_norm(x: DualQuatElem) -> DualQuatElem:
    return dq_mul(x, dq_conj(x))


ONE = DualQuatElem.scalar(1)


def phi_inv(x: DualQuatElem) -> tuple:
    return x.coeffs


def phi(v: Sequence) -> DualQuatElem:
    return DualQuatElem(tuple(v))


# p, q, r images commuting with the i, j, k images
RHO_P = linalg.mat([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
RHO_Q = linalg.mat([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
RHO_R = linalg.mat([[0, 0, 0, 1], [0, 0, -1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]])

PQR_MATRICES = (linalg.identity(4), RHO_P, RHO_Q, RHO_R)
IJK_MATRICES = (linalg.identity(4), RHO_I, RHO_J, RHO_K)
_BASIS_MATRICES = tuple(
    linalg.matmul(PQR_MATRICES[m], IJK_MATRICES[n]) for m in range(4) for n in range(4)
)


def dq_to_matrix4(x: DualQuatElem) -> linalg.Matrix:
    out = [[Fraction(0)] * 4 for _ in range(4)]
    for c, b in zip(x.coeffs, _BASIS_MATRICES):
        if c:
            for r in range(4):
                for s in range(4):
                    if b[r][s]:
                        out[r][s] += c * b[r][s]
    return tuple(tuple(r) for r in out)


_TERM_RE = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*(?:\*\s*)?)?([ijkpqr1]*)\s*")


def parse_element(text: str) -> DualQuatElem:
    """Parse a sum like ``1/2 + 1/2*iq - kp``.

    Each term is a sign, an optional rational coefficient and a word with
    at most one letter from {i,j,k} and one from {p,q,r}, in either order.
    """
    out = [Fraction(0)] * 16
    pos, first = 0, True
    text = text.strip()
    if not text:
        raise ValueError("empty element")
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        sign, coeff, word = m.group(1), m.group(2), m.group(3)
        if m.end() == pos or (coeff is None and not word) or (sign is None and not first):
            raise ValueError(f"malformed term at column {pos + 1} in {text!r}")
        c = Q(coeff) if coeff else Fraction(1)
        if sign == "-":
            c = -c
        mi = ni = 0
        for ch in word.replace("1", ""):
            if ch in "ijk":
                if ni:
                    raise ValueError(f"two i/j/k letters in {word!r}")
                ni = "ijk".index(ch) + 1
            else:
                if mi:
                    raise ValueError(f"two p/q/r letters in {word!r}")
                mi = "pqr".index(ch) + 1
        out[4 * mi + ni] += c
        pos, first = m.end(), False
    return DualQuatElem(tuple(out))


@dataclass(frozen=True)
class WF4Generators:
    e1: DualQuatElem
    e2: DualQuatElem
    e3: DualQuatElem
    e4: DualQuatElem

    def as_list(self) -> list[DualQuatElem]:
        return [self.e1, self.e2, self.e3, self.e4]


def wf4_generators() -> WF4Generators:
    h = Fraction(1, 2)
    return WF4Generators(
        parse_element("1 + iq + jr - kp") * h,
        parse_element("1 - ip - jq - kr") * h,
        parse_element("1 - ip - jr + kq") * h,
        parse_element("1 - iq - jp + kr") * h,
    )


WF4_PRINTED_MATRICES = (
    linalg.mat([[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]], Fraction(1, 2)),
    linalg.mat([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]]),
    linalg.mat([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]),
    linalg.mat([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]]),
)


def prop1_elements() -> list[DualQuatElem]:
    """The sixteen ring elements whose coefficient vectors generate the rank-16 lattice."""
    h = Fraction(1, 2)
    words = [
        "1 + i + j + k",
        "1 + i + j - k",
        "1 + i + q + iq",
        "1 + i + r + ir",
        "1 + j + q + jq",
        "1 + j + r + jr",
        "1 + iq + jr - pk",
        "1 - ir + jq - kp",
        "1 - p + q - r",
        "1 - p - q + r",
        "1 - k + q - kq",
        "1 - k + r - kr",
        "1 + ir - jq - kp",
        "1 + j - r - jr",
        "1 + j - p - jp",
    ]
    out = [parse_element(w) * h for w in words]
    out.append(DualQuatElem((Fraction(1, 4),) * 16))
    return out
