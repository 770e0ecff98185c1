"""Exact scalars: rationals and the quadratic field Q(sqrt 5).

Rationals are plain :class:`fractions.Fraction` values; they are already
kept in lowest terms with a positive denominator, which is all the rest of
the package relies on.  ``QuadExt5`` adds the golden-ratio field needed for
the icosians.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction
Scalar = Union[Fraction, "QuadExt5"]


def Q(value) -> Fraction:
    """Coerce ``value`` (int, Fraction or "p/q" text) to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot make an exact rational from {value!r}")


def rational_arith(a, b, op: str) -> Fraction:
    a, b = Q(a), Q(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise ZeroDivisionError("rational division by zero")
        return a / b
    if op == "neg":
        return -a
    raise ValueError(f"unknown rational op {op!r}")


_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    m = _RAT_RE.match(text)
    if not m:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class QuadExt5:
    """The number ``rat + root5 * sqrt(5)`` with rational parts."""

    rat: Fraction = Fraction(0)
    root5: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "rat", Q(self.rat))
        object.__setattr__(self, "root5", Q(self.root5))

    @staticmethod
    def coerce(x) -> "QuadExt5":
        if isinstance(x, QuadExt5):
            return x
        return QuadExt5(Q(x), Fraction(0))

    def __add__(self, other):
        try:
            o = QuadExt5.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadExt5(self.rat + o.rat, self.root5 + o.root5)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt5(-self.rat, -self.root5)

    def __sub__(self, other):
        try:
            o = QuadExt5.coerce(other)
        except TypeError:
            return NotImplemented
        return QuadExt5(self.rat - o.rat, self.root5 - o.root5)

    def __rsub__(self, other):
        return QuadExt5.coerce(other) - self

    def __mul__(self, other):
        try:
            o = QuadExt5.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.rat, self.root5, o.rat, o.root5
        return QuadExt5(a * c + 5 * b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExt5":
        """Galois conjugate ``rat - root5*sqrt5``."""
        return QuadExt5(self.rat, -self.root5)

    def field_norm(self) -> Fraction:
        return self.rat * self.rat - 5 * self.root5 * self.root5

    def inverse(self) -> "QuadExt5":
        n = self.field_norm()
        if n == 0:
            # a^2 = 5 b^2 has no rational solution besides zero
            raise ZeroDivisionError("inverse of zero in Q(sqrt5)")
        c = self.conjugate()
        return QuadExt5(c.rat / n, c.root5 / n)

    def __truediv__(self, other):
        return self * QuadExt5.coerce(other).inverse()

    def __rtruediv__(self, other):
        return QuadExt5.coerce(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, QuadExt5):
            return self.rat == other.rat and self.root5 == other.root5
        if isinstance(other, (int, Fraction)):
            return self.root5 == 0 and self.rat == other
        return NotImplemented

    def __hash__(self):
        if self.root5 == 0:
            return hash(self.rat)
        return hash((self.rat, self.root5))

    def __bool__(self):
        return bool(self.rat) or bool(self.root5)

    def __str__(self):
        return format_quadext(self)

    def __repr__(self):
        return f"QuadExt5({format_quadext(self)!r})"


def quadext_arith(a, b, op: str) -> QuadExt5:
    a = QuadExt5.coerce(a)
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    b = QuadExt5.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown Q(sqrt5) op {op!r}")


SQRT5 = QuadExt5(0, 1)
SIGMA = QuadExt5(Fraction(1, 2), Fraction(-1, 2))
TAU = QuadExt5(Fraction(1, 2), Fraction(1, 2))


def format_quadext(x: QuadExt5) -> str:
    b = x.root5
    sign = "-" if b < 0 else "+"
    return f"{format_rational(x.rat)}{sign}{format_rational(abs(b))}*sqrt5"


_QUAD_RE = re.compile(
    r"^\s*(?:(?P<a>[+-]?\d+(?:/\d+)?)\s*)?"
    r"(?:(?P<sign>[+-])?\s*(?:(?P<b>\d+(?:/\d+)?)\s*\*\s*)?sqrt5)?\s*$"
)


def parse_quadext(text: str) -> QuadExt5:
    m = _QUAD_RE.match(text)
    if not m or (m.group("a") is None and "sqrt5" not in text):
        raise ValueError(f"not an element of Q(sqrt5): {text!r}")
    a = parse_rational(m.group("a")) if m.group("a") else Fraction(0)
    if "sqrt5" in text:
        b = parse_rational(m.group("b")) if m.group("b") else Fraction(1)
        if m.group("sign") == "-":
            b = -b
    else:
        b = Fraction(0)
    return QuadExt5(a, b)


def parse_scalar(text: str) -> Scalar:
    """Parse either text form; values without ``sqrt5`` come back as Fraction."""
    if "sqrt5" in text:
        return parse_quadext(text)
    return parse_rational(text)


def format_scalar(x) -> str:
    if isinstance(x, QuadExt5):
        return format_quadext(x)
    return format_rational(Q(x))


def scalar_key(x) -> tuple:
    """Canonical hashable key for either scalar kind."""
    if isinstance(x, QuadExt5):
        return (x.rat, x.root5)
    return (Q(x), Fraction(0))
