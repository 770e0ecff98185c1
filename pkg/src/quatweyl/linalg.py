"""Exact dense matrices as tuples of tuples.

Matrices are immutable ``tuple[tuple[scalar, ...], ...]`` so they hash and
compare exactly; that tuple is also the canonical key used by the group
closures.  Entries are Fractions unless a caller deliberately passes
``QuadExt5`` values, and everything here is agnostic to which.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .exact import Q, format_scalar, parse_scalar

Matrix = tuple
Vector = tuple


class MatrixFormatError(ValueError):
    """Malformed matrix text; carries the offending line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def mat(rows: Iterable[Iterable], scale=1) -> Matrix:
    s = Q(scale)
    return tuple(tuple(Q(x) * s for x in row) for row in rows)


def vec(values: Iterable, scale=1) -> Vector:
    s = Q(scale)
    return tuple(Q(x) * s for x in values)


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def zeros(n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return tuple(tuple(Fraction(0) for _ in range(m)) for _ in range(n))


def shape(a: Matrix) -> tuple[int, int]:
    return len(a), (len(a[0]) if a else 0)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt)
        for row in a
    )


def vecmat(v: Vector, a: Matrix) -> Vector:
    """Row vector times matrix."""
    return tuple(sum((x * y for x, y in zip(v, col)), Fraction(0)) for col in zip(*a))


def matvec(a: Matrix, v: Vector) -> Vector:
    return tuple(sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a)


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def scale(a: Matrix, c) -> Matrix:
    return tuple(tuple(x * c for x in r) for r in a)


def neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in r) for r in a)


def matpow(a: Matrix, k: int) -> Matrix:
    if k < 0:
        a, k = inverse(a), -k
    result = identity(len(a))
    base = a
    while k:
        if k & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        k >>= 1
    return result


def kron(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(x * y for x in ra for y in rb)
        for ra in a
        for rb in b
    )


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    n, m = len(a), len(b)
    z = Fraction(0)
    top = tuple(tuple(r) + (z,) * m for r in a)
    bot = tuple((z,) * n + tuple(r) for r in b)
    return top + bot


def blocks(tl: Matrix, tr: Matrix, bl: Matrix, br: Matrix) -> Matrix:
    return tuple(x + y for x, y in zip(tl, tr)) + tuple(x + y for x, y in zip(bl, br))


def is_identity(a: Matrix) -> bool:
    return all(a[i][j] == (1 if i == j else 0) for i in range(len(a)) for j in range(len(a)))


def is_orthogonal(a: Matrix) -> bool:
    return is_identity(matmul(a, transpose(a)))


def is_integral(a: Matrix) -> bool:
    return all(Fraction(x).denominator == 1 for r in a for x in r)


def common_denominator(rows: Iterable[Iterable]) -> int:
    d = 1
    for r in rows:
        for x in r:
            d = lcm(d, Fraction(x).denominator)
    return d


def to_integer_rows(rows: Sequence[Sequence]) -> tuple[list[list[int]], int]:
    """Scale by the common denominator; returns (integer rows, scale)."""
    d = common_denominator(rows)
    return [[int(Fraction(x) * d) for x in r] for r in rows], d


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    work = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if work[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        work[col], work[piv] = work[piv], work[col]
        p = work[col][col]
        work[col] = [x / p for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return tuple(tuple(r[n:]) for r in work)


def det(a: Matrix) -> Fraction:
    """Exact determinant via fraction-free Bareiss elimination."""
    n = len(a)
    if n == 0:
        return Fraction(1)
    m, d = to_integer_rows(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return Fraction(sign * m[n - 1][n - 1], d**n)


def rank(rows: Sequence[Sequence]) -> int:
    work = [list(map(Fraction, r)) for r in rows]
    r = 0
    ncols = len(work[0]) if work else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(r + 1, len(work)):
            if work[i][c] != 0:
                f = work[i][c] / work[r][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
    return r


def dot(u: Vector, v: Vector):
    return sum((x * y for x, y in zip(u, v)), Fraction(0))


def parse_matrix(text: str) -> Matrix:
    """Read the one-row-per-line text format (``#`` comments, blank lines ok)."""
    rows = []
    width = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        row = []
        col = 0
        for tok in line.split(" "):
            col += 1
            if tok == "":
                continue
            try:
                row.append(parse_scalar(tok))
            except ValueError as exc:
                raise MatrixFormatError(str(exc), lineno, col) from None
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise MatrixFormatError(f"expected {width} entries, found {len(row)}", lineno, 1)
        rows.append(tuple(row))
    if not rows:
        raise MatrixFormatError("no rows", 0, 0)
    return tuple(rows)


def format_matrix(a: Matrix) -> str:
    return "\n".join(" ".join(format_scalar(x) for x in r) for r in a) + "\n"


def matrix_to_json(a: Matrix) -> list[list[str]]:
    return [[format_scalar(x) for x in r] for r in a]
