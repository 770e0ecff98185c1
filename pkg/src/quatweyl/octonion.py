"""Octonions from an explicit basis multiplication table.

``TABLE[a][b] = (sign, c)`` means ``z_a * z_b = sign * z_c``.  Every 8x8
matrix in this module is regenerated from that table; the printed
displays are kept only to be diffed against.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .dualquat import RHO_P, RHO_Q, RHO_R
from .exact import Q
from .quat import RHO_I, RHO_J, RHO_K

_PRINTED_TABLE = """
 0  1  2  3  4  5  6  7
 1 -0  3 -2  5 -4 -7  6
 2 -3 -0  1  6  7 -4 -5
 3  2 -1 -0  7 -6  5 -4
 4 -5 -6 -7 -0  1  2  3
 5  4 -7  6 -1 -0 -3  2
 6  7  4 -5 -2  3 -0 -1
 7 -6  5  4 -3 -2  1 -0
"""


def _parse_table(text: str) -> tuple:
    rows = []
    for line in text.strip().splitlines():
        row = []
        for tok in line.split():
            row.append((-1 if tok.startswith("-") else 1, int(tok.lstrip("-"))))
        rows.append(tuple(row))
    return tuple(rows)


TABLE = _parse_table(_PRINTED_TABLE)


@dataclass(frozen=True)
class Octonion:
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != 8:
            raise ValueError("an octonion has 8 coefficients")
        object.__setattr__(self, "coeffs", tuple(Q(c) for c in self.coeffs))

    @classmethod
    def basis(cls, a: int) -> "Octonion":
        return cls(tuple(int(i == a) for i in range(8)))

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return oct_mul(self, other)
        return Octonion(tuple(c * other for c in self.coeffs))

    def __rmul__(self, other):
        return Octonion(tuple(other * c for c in self.coeffs))

    def __add__(self, other):
        return Octonion(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return Octonion(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return Octonion(tuple(-a for a in self.coeffs))

    def conj(self) -> "Octonion":
        return Octonion((self.coeffs[0],) + tuple(-c for c in self.coeffs[1:]))

    def norm(self) -> Fraction:
        return sum((c * c for c in self.coeffs), Fraction(0))

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


def oct_mul(a: Octonion, b: Octonion) -> Octonion:
    out = [Fraction(0)] * 8
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        row = TABLE[i]
        for j, y in enumerate(b.coeffs):
            if y:
                s, c = row[j]
                out[c] += s * x * y
    return Octonion(tuple(out))


def left_mult_matrix(g: Octonion) -> linalg.Matrix:
    """L with L u = g u for coefficient columns u; column j is g * z_j."""
    cols = [oct_mul(g, Octonion.basis(j)).coeffs for j in range(8)]
    return linalg.transpose(tuple(cols))


def zeta(a: int) -> linalg.Matrix:
    return left_mult_matrix(Octonion.basis(a))


def is_alternative(a: Octonion, b: Octonion) -> bool:
    return oct_mul(oct_mul(a, a), b) == oct_mul(a, oct_mul(a, b)) and \
        oct_mul(oct_mul(b, a), a) == oct_mul(b, oct_mul(a, a))


def nonassociativity_witness() -> tuple[int, int, int]:
    """First basis triple, in lexicographic order, with (ab)c != a(bc)."""
    for a, b, c in itertools.product(range(1, 8), repeat=3):
        x, y, z = (Octonion.basis(t) for t in (a, b, c))
        if oct_mul(oct_mul(x, y), z) != oct_mul(x, oct_mul(y, z)):
            return a, b, c
    raise AssertionError("table is associative on all basis triples")


def associator_failures() -> int:
    n = 0
    for a, b, c in itertools.product(range(1, 8), repeat=3):
        x, y, z = (Octonion.basis(t) for t in (a, b, c))
        n += oct_mul(oct_mul(x, y), z) != oct_mul(x, oct_mul(y, z))
    return n


# --- block expressions ------------------------------------------------------------

_LETTERS = {
    "E": linalg.identity(4), "i": RHO_I, "j": RHO_J, "k": RHO_K,
    "p": RHO_P, "q": RHO_Q, "r": RHO_R,
}

_TERM = re.compile(r"([+-]?)([Eijkpqr]+)")


def block_expr(text: str, scale=1) -> linalg.Matrix:
    """Evaluate a sum such as ``ip+jq-kr+E`` over the 4x4 letter matrices.

    Adjacent letters multiply left to right.
    """
    s = text.replace(" ", "")
    pos = 0
    out = linalg.zeros(4)
    for m in _TERM.finditer(s):
        if m.start() != pos:
            raise ValueError(f"cannot parse {text!r} at {pos}")
        pos = m.end()
        term = linalg.identity(4)
        for ch in m.group(2):
            term = linalg.matmul(term, _LETTERS[ch])
        out = (linalg.sub if m.group(1) == "-" else linalg.add)(out, term)
    if pos != len(s):
        raise ValueError(f"cannot parse {text!r} at {pos}")
    return linalg.scale(out, Q(scale))


def block8(tl=None, tr=None, bl=None, br=None) -> linalg.Matrix:
    z = linalg.zeros(4)
    return linalg.blocks(tl or z, tr or z, bl or z, br or z)


_H = Fraction(1, 2)
_Q4 = Fraction(1, 4)

# (top-left, top-right, bottom-left, bottom-right, scale) as printed in block form
BLOCK_FORMS = {
    "zeta1": ("-i", None, None, "-p", 1),
    "zeta2": ("-j", None, None, "-q", 1),
    "zeta3": ("k", None, None, "r", 1),
    "zeta4": (None, "ip+jq-kr+E", "-ip-jq+kr-E", None, _H),
    "zeta5": (None, "i-jr-kq-p", "i+jr+kq-p", None, _H),
    "zeta6": (None, "ir+j+kp-q", "-ir+j-kp-q", None, _H),
    "zeta7": (None, "-iq+jp-k-q", "iq-jp-k-q", None, _H),
    "xi1": ("-p", None, None, "p", 1),
    "xi2": ("-q", None, None, "q", 1),
    "xi3": ("-r", None, None, "r", 1),
}


def block_form(name: str) -> linalg.Matrix:
    tl, tr, bl, br, s = BLOCK_FORMS[name]
    parts = [block_expr(x, s) if x else None for x in (tl, tr, bl, br)]
    return block8(*parts)


def eta_block_form() -> linalg.Matrix:
    return block8(
        block_expr("-i-j+k", _H),
        block_expr("ip+jq-kr+E", _Q4),
        block_expr("-ip-jq+kr-E", _Q4),
        block_expr("-p-q+r", _H),
    )


# --- printed matrices -------------------------------------------------------------------

def _pm(text: str, scale=1) -> linalg.Matrix:
    return linalg.mat([[int(x) for x in line.split()] for line in text.strip().splitlines()], scale)


PRINTED = {
    "zeta1": _pm("""
        0 -1 0 0 0 0 0 0
        1 0 0 0 0 0 0 0
        0 0 0 -1 0 0 0 0
        0 0 1 0 0 0 0 0
        0 0 0 0 0 -1 0 0
        0 0 0 0 1 0 0 0
        0 0 0 0 0 0 0 1
        0 0 0 0 0 0 -1 0"""),
    "zeta2": _pm("""
        0 0 -1 0 0 0 0 0
        0 0 0 1 0 0 0 0
        1 0 0 0 0 0 0 0
        0 -1 0 0 0 0 0 0
        0 0 0 0 0 0 -1 0
        0 0 0 0 0 0 0 -1
        0 0 0 0 1 0 0 0
        0 0 0 0 0 1 0 0"""),
    "zeta3": _pm("""
        0 0 0 -1 0 0 0 0
        0 0 -1 0 0 0 0 0
        0 1 0 0 0 0 0 0
        1 0 0 0 0 0 0 0
        0 0 0 0 0 0 0 -1
        0 0 0 0 0 0 1 0
        0 0 0 0 0 -1 0 0
        0 0 0 0 1 0 0 0"""),
    "zeta4": _pm("""
        0 0 0 0 -1 0 0 0
        0 0 0 0 0 1 0 0
        0 0 0 0 0 0 1 0
        0 0 0 0 0 0 0 1
        1 0 0 0 0 0 0 0
        0 -1 0 0 0 0 0 0
        0 0 -1 0 0 0 0 0
        0 0 0 -1 0 0 0 0"""),
    "zeta5": _pm("""
        0 0 0 0 0 -1 0 0
        0 0 0 0 -1 0 0 0
        0 0 0 0 0 0 0 1
        0 0 0 0 0 0 -1 0
        0 1 0 0 0 0 0 0
        1 0 0 0 0 0 0 0
        0 0 0 1 0 0 0 0
        0 0 -1 0 0 0 0 0"""),
    "zeta6": _pm("""
        0 0 0 0 0 0 -1 0
        0 0 0 0 0 0 0 -1
        0 0 0 0 -1 0 0 0
        0 0 0 0 0 1 0 0
        0 0 1 0 0 0 0 0
        0 0 0 -1 0 0 0 0
        1 0 0 0 0 0 0 0
        0 1 0 0 0 0 0 0"""),
    "zeta7": _pm("""
        0 0 0 0 0 0 0 -1
        0 0 0 0 0 0 1 0
        0 0 0 0 0 -1 0 0
        0 0 0 0 -1 0 0 0
        0 0 0 1 0 0 0 0
        0 0 1 0 0 0 0 0
        0 -1 0 0 0 0 0 0
        1 0 0 0 0 0 0 0"""),
    "eta": _pm("""
        0 1 1 1 1 0 0 0
        -1 0 1 -1 0 -1 0 0
        -1 -1 0 1 0 0 -1 0
        -1 1 -1 0 0 0 0 -1
        -1 0 0 0 0 1 1 1
        0 1 0 0 -1 0 -1 1
        0 0 1 0 -1 1 0 -1
        0 0 0 1 -1 -1 1 0""", _H),
    "xi1": _pm("""
        0 -1 0 0 0 0 0 0
        1 0 0 0 0 0 0 0
        0 0 0 1 0 0 0 0
        0 0 -1 0 0 0 0 0
        0 0 0 0 0 1 0 0
        0 0 0 0 -1 0 0 0
        0 0 0 0 0 0 0 -1
        0 0 0 0 0 0 1 0"""),
    "xi2": _pm("""
        0 0 -1 0 0 0 0 0
        0 0 0 -1 0 0 0 0
        1 0 0 0 0 0 0 0
        0 1 0 0 0 0 0 0
        0 0 0 0 0 0 1 0
        0 0 0 0 0 0 0 1
        0 0 0 0 -1 0 0 0
        0 0 0 0 0 -1 0 0"""),
    "xi3": _pm("""
        0 0 0 -1 0 0 0 0
        0 0 1 0 0 0 0 0
        0 -1 0 0 0 0 0 0
        1 0 0 0 0 0 0 0
        0 0 0 0 0 0 0 1
        0 0 0 0 0 0 -1 0
        0 0 0 0 0 1 0 0
        0 0 0 0 -1 0 0 0"""),
}


def eta() -> linalg.Matrix:
    s = zeta(1)
    for a in (2, 3, 4):
        s = linalg.add(s, zeta(a))
    return linalg.scale(s, _H)


def xi(n: int) -> linalg.Matrix:
    return block_form(f"xi{n}")


def regenerated() -> dict[str, linalg.Matrix]:
    """Authoritative versions: zetas and eta from the table, xis from block form."""
    out = {f"zeta{a}": zeta(a) for a in range(1, 8)}
    out["eta"] = eta()
    for n in (1, 2, 3):
        out[f"xi{n}"] = xi(n)
    return out


@dataclass(frozen=True)
class EntryDiff:
    name: str
    row: int
    col: int
    expected: Fraction
    found: Fraction

    def __str__(self):
        return f"{self.name}[{self.row},{self.col}]: regenerated {self.expected}, other {self.found}"


def diff_matrices(name: str, ref: linalg.Matrix, other: linalg.Matrix) -> list[EntryDiff]:
    return [
        EntryDiff(name, r, c, ref[r][c], other[r][c])
        for r in range(len(ref)) for c in range(len(ref[0]))
        if ref[r][c] != other[r][c]
    ]


def diff_against_printed() -> dict[str, list[EntryDiff]]:
    reg = regenerated()
    return {n: diff_matrices(n, reg[n], PRINTED[n]) for n in PRINTED}


def diff_against_block_forms() -> dict[str, list[EntryDiff]]:
    """Table-derived zetas and eta against the block expressions."""
    reg = regenerated()
    out = {n: diff_matrices(n, reg[n], block_form(n)) for n in BLOCK_FORMS if n.startswith("zeta")}
    out["eta"] = diff_matrices("eta", reg["eta"], eta_block_form())
    return out


OBSERVATION_NAMES = ("zeta1", "zeta2", "zeta3", "eta", "xi1", "xi2")


def observation_generators(check: bool = True) -> list[linalg.Matrix]:
    """Generators of the 8-dimensional group; xi1, xi2 are cross-checked against the printed ones."""
    reg = regenerated()
    if check:
        for n in ("xi1", "xi2"):
            d = diff_matrices(n, reg[n], PRINTED[n])
            if d:
                raise ValueError("; ".join(str(x) for x in d))
    return [reg[n] for n in OBSERVATION_NAMES]


def standard_basis(n: int = 8) -> list[tuple]:
    return [tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n)]
