"""Rational lattices given by a row basis.

Everything is exact.  A lattice with rational coordinates is scaled by the
common denominator to an integer lattice, and its Hermite normal form then
gives a triangular basis in coordinate space.  Short vectors are enumerated
column by column against that basis: each coordinate only depends on the
coefficients already chosen, so the partial squared length is an exact
integer lower bound and the search prunes on it directly.

A second, Gram-only enumerator (LDL^T, Fincke-Pohst) is kept for lattices
known only by their Gram matrix and as an independent cross-check.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .exact import Q


class LatticeError(ValueError):
    pass


class VectorCapExceeded(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"enumeration exceeded the cap of {cap} vectors")
        self.cap = cap


@dataclass(frozen=True)
class GeneratorMatrix:
    rows: tuple

    def __post_init__(self):
        rows = linalg.mat(self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise LatticeError("empty generator matrix")
        if linalg.rank(rows) != len(rows):
            raise LatticeError("generator rows are linearly dependent")

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def dim(self) -> int:
        return len(self.rows[0])

    @property
    def is_square(self) -> bool:
        return self.rank == self.dim


def as_rows(m) -> tuple:
    return m.rows if isinstance(m, GeneratorMatrix) else linalg.mat(m)


@dataclass(frozen=True)
class GramMatrix:
    entries: tuple

    def __post_init__(self):
        g = linalg.mat(self.entries)
        object.__setattr__(self, "entries", g)
        if g != linalg.transpose(g):
            raise LatticeError("Gram matrix is not symmetric")
        if not is_positive_definite(g):
            raise LatticeError("Gram matrix is not positive definite")

    def diagonal(self) -> tuple:
        return tuple(self.entries[i][i] for i in range(len(self.entries)))


def gram(m) -> GramMatrix:
    rows = as_rows(m)
    return GramMatrix(linalg.matmul(rows, linalg.transpose(rows)))


def is_positive_definite(g: linalg.Matrix) -> bool:
    """Exact leading principal minors test."""
    return all(linalg.det(tuple(r[:k] for r in g[:k])) > 0 for k in range(1, len(g) + 1))


# --- Hermite normal form ------------------------------------------------------

def _integer_hnf(rows: list[list[int]]) -> list[list[int]]:
    """Row-style HNF: upper echelon, positive pivots, entries above a pivot in [0, pivot).

    Pivot policy: leftmost column with a nonzero entry among the remaining
    rows; the row of smallest absolute value in that column is the pivot and
    the others are reduced against it until it is the only nonzero one.
    """
    a = [list(r) for r in rows if any(r)]
    ncols = len(rows[0]) if rows else 0
    out = []
    col = 0
    while a and col < ncols:
        nz = [r for r in a if r[col]]
        if not nz:
            col += 1
            continue
        while True:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            others = nz[1:]
            if not others:
                break
            for r in others:
                q = r[col] // piv[col]
                for c in range(col, ncols):
                    r[c] -= q * piv[c]
            nz = [piv] + [r for r in others if r[col]]
        if piv[col] < 0:
            for c in range(col, ncols):
                piv[c] = -piv[c]
        a = [r for r in a if r is not piv and any(r)]
        out.append((col, piv))
        col += 1
    result = [r for _, r in out]
    for i, (pc, prow) in enumerate(out):
        for k in range(i):
            row = result[k]
            q = row[pc] // prow[pc]
            if q:
                for c in range(pc, ncols):
                    row[c] -= q * prow[c]
    return result


def hnf(m, allow_deficient: bool = False) -> GeneratorMatrix:
    """Canonical triangular basis of the lattice spanned by the given rows.

    Accepts any generating set.  Raises LatticeError when the span has
    lower rank than the ambient dimension unless ``allow_deficient``.
    """
    rows = as_rows(m)
    ints, d = linalg.to_integer_rows(rows)
    h = _integer_hnf(ints)
    if not allow_deficient and len(h) < len(rows[0]):
        raise LatticeError(f"rank-deficient: rank {len(h)} in dimension {len(rows[0])}")
    return GeneratorMatrix(tuple(tuple(Fraction(x, d) for x in r) for r in h))


def lattice_rank(m) -> int:
    rows = as_rows(m)
    ints, _ = linalg.to_integer_rows(rows)
    return len(_integer_hnf(ints))


def det_lattice(m) -> Fraction:
    """Signed determinant of a square basis; use abs() for the covolume."""
    rows = as_rows(m)
    if len(rows) != len(rows[0]):
        raise LatticeError("determinant needs a square basis")
    return linalg.det(rows)


def contains(outer, inner) -> bool:
    """True iff every row of ``inner`` lies in the lattice of ``outer``."""
    o = as_rows(outer)
    i = as_rows(inner)
    if len(o[0]) != len(i[0]):
        raise LatticeError("dimension mismatch")
    if len(o) == len(o[0]):
        return linalg.is_integral(linalg.matmul(i, linalg.inverse(o)))
    return all(member(o, v) is not None for v in i)


def member(m, v: Sequence) -> tuple | None:
    """Integer coefficients c with c * M = v, or None.

    ``M`` may be any generating set; dependent rows are handled through
    the unimodular transform of an augmented HNF.
    """
    rows = as_rows(m)
    v = linalg.vec(v)
    if len(v) != len(rows[0]):
        raise LatticeError("dimension mismatch")
    if linalg.rank(rows) < len(rows):
        return _member_dependent(rows, v)
    return _member_basis(rows, v)


def _member_dependent(rows, v) -> tuple | None:
    ints, d = linalg.to_integer_rows(rows)
    k, n = len(ints), len(ints[0])
    aug = [list(r) + [int(i == j) for j in range(k)] for i, r in enumerate(ints)]
    h = [r for r in _integer_hnf(aug) if any(r[:n])]
    basis = [tuple(Fraction(x, d) for x in r[:n]) for r in h]
    c = _member_basis(basis, v)
    if c is None:
        return None
    return tuple(sum(ci * r[n + j] for ci, r in zip(c, h)) for j in range(k))


def _member_basis(rows, v) -> tuple | None:
    n = len(rows)
    # solve c * rows = v over Q via the transposed system
    aug = [[rows[r][c] for r in range(n)] + [v[c]] for c in range(len(v))]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    if any(aug[i][n] != 0 for i in range(r, len(aug))):
        return None
    coeffs = [Fraction(0)] * n
    for i, c in enumerate(piv_cols):
        coeffs[c] = aug[i][n]
    if any(x.denominator != 1 for x in coeffs):
        return None
    return tuple(int(x) for x in coeffs)


# --- enumeration ----------------------------------------------------------------

def _echelon_integer_basis(m) -> tuple[list[list[int]], int]:
    rows = as_rows(m)
    ints, d = linalg.to_integer_rows(rows)
    return _integer_hnf(ints), d


def _enumerate_coordinates(h: list[list[int]], bound: int, cap: int):
    """Yield integer vectors v in the row lattice of echelon ``h`` with |v|^2 <= bound.

    Depth-first over rows in pivot order.  Before choosing the coefficient
    of row r, every column left of that row's pivot is already final, so
    the accumulated squared length is exact and monotone along the path.
    """
    n = len(h)
    if n == 0:
        yield ()
        return
    ncols = len(h[0])
    pivots = [next(c for c, x in enumerate(row) if x) for row in h]
    found = 0

    def rec(r, acc, spent):
        nonlocal found
        pc = pivots[r]
        stop = pivots[r + 1] if r + 1 < n else ncols
        row = h[r]
        p = row[pc]
        rem = bound - spent
        base = acc[pc]
        # coordinate at the pivot is base + c*p; need (base + c*p)^2 <= rem
        s = math.isqrt(rem)
        lo = -((s + base) // p)
        hi = (s - base) // p
        for c in range(lo, hi + 1):
            x = base + c * p
            sq = spent + x * x
            if sq > bound:
                continue
            if c:
                new = acc[:pc] + [a + c * b for a, b in zip(acc[pc:], row[pc:])]
            else:
                new = acc
            for col in range(pc + 1, stop):
                sq += new[col] * new[col]
            if sq > bound:
                continue
            if r + 1 == n:
                found += 1
                if found > cap:
                    raise VectorCapExceeded(cap)
                yield tuple(new)
            else:
                yield from rec(r + 1, new, sq)

    yield from rec(0, [0] * ncols, 0)


def shortest_vectors(m, norm_bound, cap: int = 10**7, include_zero: bool = False) -> dict:
    """All lattice vectors with squared length <= ``norm_bound``, grouped by norm.

    Returns ``{norm: [vector, ...]}`` with norms ascending and each list
    sorted; the zero vector is omitted unless ``include_zero``.
    """
    bound = Q(norm_bound)
    h, d = _echelon_integer_basis(m)
    scaled = bound * d * d
    ibound = scaled.numerator // scaled.denominator
    groups: dict = {}
    for v in _enumerate_coordinates(h, ibound, cap + 1):
        nrm = Fraction(sum(x * x for x in v), d * d)
        if nrm == 0 and not include_zero:
            continue
        groups.setdefault(nrm, []).append(tuple(Fraction(x, d) for x in v))
    return {k: sorted(groups[k]) for k in sorted(groups)}


def enumerate_by_gram(g, norm_bound, cap: int = 10**7) -> dict:
    """Coefficient vectors c with c G c^T <= bound, grouped by that value.

    Fincke-Pohst over an exact LDL^T factorisation.  Interval endpoints are
    widened floats; each leaf is accepted only after the exact integer
    quadratic form is evaluated.
    """
    g = g.entries if isinstance(g, GramMatrix) else linalg.mat(g)
    n = len(g)
    dd = linalg.common_denominator(g)
    gi = [[int(x * dd) for x in r] for r in g]
    bound = Q(norm_bound)
    ibound = bound * dd
    # g = L D L^T with unit lower L; q(c) = sum_i d_i (c_i + sum_{j>i} mu_ji c_j)^2
    # enumerate from the last coordinate down
    L = [[Fraction(0)] * n for _ in range(n)]
    D = [Fraction(0)] * n
    for i in range(n):
        for j in range(i + 1):
            s = g[i][j] - sum(L[i][k] * L[j][k] * D[k] for k in range(j))
            if i == j:
                D[i] = s
                L[i][i] = Fraction(1)
            else:
                L[i][j] = s / D[j]
    if any(x <= 0 for x in D):
        raise LatticeError("Gram matrix is not positive definite")
    # q(c) = sum_j D_j (c_j + sum_{i>j} L_ij c_i)^2
    Df = [float(x) for x in D]
    Lf = [[float(x) for x in r] for r in L]
    fb = float(bound) * (1 + 1e-9) + 1e-9
    out: dict = {}
    count = 0
    c = [0] * n

    def rec(j, spent):
        nonlocal count
        centre = -sum(Lf[i][j] * c[i] for i in range(j + 1, n))
        room = fb - spent
        if room < 0:
            return
        r = math.sqrt(room / Df[j]) + 1e-9
        lo = math.ceil(centre - r)
        hi = math.floor(centre + r)
        for x in range(lo, hi + 1):
            c[j] = x
            t = x - centre
            sp = spent + Df[j] * t * t
            if sp > fb:
                continue
            if j == 0:
                val = sum(c[a] * gi[a][b] * c[b] for a in range(n) for b in range(n))
                if val <= ibound and val != 0:
                    count += 1
                    if count > cap:
                        raise VectorCapExceeded(cap)
                    out.setdefault(Fraction(val, dd), []).append(tuple(c))
            else:
                rec(j - 1, sp)
        c[j] = 0

    rec(n - 1, 0.0)
    return {k: sorted(out[k]) for k in sorted(out)}


@dataclass
class ThetaPrefix:
    counts: dict
    max_norm: Fraction

    def coefficient(self, norm) -> int:
        norm = Q(norm)
        if norm > self.max_norm:
            raise LatticeError(f"norm {norm} beyond the computed bound {self.max_norm}")
        return self.counts.get(norm, 0)

    def pairs(self) -> list[tuple[Fraction, int]]:
        return sorted(self.counts.items())

    def series(self, step=1) -> list[int]:
        """Coefficients at 0, step, 2*step, ... up to max_norm."""
        step = Q(step)
        k = int(self.max_norm / step)
        return [self.coefficient(step * i) for i in range(k + 1)]

    def to_json(self, exponent_scale=None) -> list[dict]:
        out = []
        for nrm, cnt in self.pairs():
            item = {"norm": str(nrm), "count": cnt}
            if exponent_scale is not None:
                item["q_exponent"] = str(nrm * Q(exponent_scale))
            out.append(item)
        return out


def theta_prefix(m, max_norm, cap: int = 10**7) -> ThetaPrefix:
    """Counts only; vectors are never materialised as Fractions."""
    mx = Q(max_norm)
    h, d = _echelon_integer_basis(m)
    scaled = mx * d * d
    cnt = Counter()
    for v in _enumerate_coordinates(h, scaled.numerator // scaled.denominator, cap + 1):
        cnt[sum(x * x for x in v)] += 1
    counts = {Fraction(k, d * d): c for k, c in sorted(cnt.items())}
    return ThetaPrefix(counts, mx)


def minimal_norm(m, search_bound=None) -> Fraction:
    """Smallest nonzero norm, searching up to the shortest basis row norm."""
    rows = as_rows(m)
    b = Q(search_bound) if search_bound is not None else min(linalg.dot(r, r) for r in rows)
    shells = shortest_vectors(m, b)
    return min(shells)


# --- shell classification ----------------------------------------------------------

@dataclass(frozen=True)
class ShellType:
    """Multiset of coordinate values.

    ``entries`` holds ``(value, merged, count)`` sorted descending by value;
    ``merged`` entries record an absolute value whose signs were pooled.
    """

    entries: tuple

    def format(self, scale=4) -> str:
        s = Q(scale)
        parts = []
        for value, merged, count in self.entries:
            x = value * s
            txt = str(x if x.denominator != 1 else x.numerator)
            parts.append(f"{'±' if merged else ''}{txt}^{count}")
        suffix = f"/{s}" if s != 1 else ""
        return "(" + ",".join(parts) + ")" + suffix


@dataclass
class ShellTypeHistogram:
    counts: Counter = field(default_factory=Counter)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def rows(self, scale=4) -> list[tuple[str, int]]:
        return sorted(((t.format(scale), c) for t, c in self.counts.items()),
                      key=lambda x: (-x[1], x[0]))

    def to_json(self, scale=4) -> list[dict]:
        return [{"signature": s, "count": c} for s, c in self.rows(scale)]


def shell_type(v: Sequence, merge_signs: Iterable = ()) -> ShellType:
    merge = {abs(Q(x)) for x in merge_signs}
    cnt = Counter()
    for x in v:
        x = Q(x)
        if abs(x) in merge:
            cnt[(abs(x), True)] += 1
        else:
            cnt[(x, False)] += 1
    entries = tuple(sorted(((val, mg, c) for (val, mg), c in cnt.items()),
                           key=lambda e: (-e[0], e[1])))
    return ShellType(entries)


def classify_shell(vectors: Iterable[Sequence], merge_signs: Iterable = ()) -> ShellTypeHistogram:
    """Histogram of coordinate-value multisets.

    Values listed in ``merge_signs`` are counted by absolute value, which
    is how tables that lump together all sign patterns of (+-1^16) are
    reproduced.
    """
    merge = tuple(merge_signs)
    h = ShellTypeHistogram()
    for v in vectors:
        h.counts[shell_type(v, merge)] += 1
    return h


def shell_to_json(norm, vectors, merge_signs=(), scale=4) -> dict:
    hist = classify_shell(vectors, merge_signs)
    return {"norm": str(Q(norm)), "count": len(vectors), "types": hist.to_json(scale)}


# --- catalogue ------------------------------------------------------------------------

def _m(rows, s=1):
    return linalg.mat(rows, Fraction(s))


F4 = _m([
    [0, 2, -2, 0],
    [0, 0, 2, -2],
    [0, 0, 0, 2],
    [1, -1, -1, -1],
], Fraction(1, 2))

F4_ALT = _m([
    [1, 1, 1, 1],
    [0, 2, 0, 0],
    [0, 0, 2, 0],
    [0, 0, 0, 2],
], Fraction(1, 2))

E8 = _m([
    [2, -2, 0, 0, 0, 0, 0, 0],
    [0, 2, -2, 0, 0, 0, 0, 0],
    [0, 0, 2, -2, 0, 0, 0, 0],
    [0, 0, 0, 2, -2, 0, 0, 0],
    [0, 0, 0, 0, 2, -2, 0, 0],
    [0, 0, 0, 0, 0, 2, -2, 0],
    [0, 0, 0, 0, 0, 2, 2, 0],
    [1, -1, -1, -1, -1, -1, -1, -1],
], Fraction(1, 2))

E8_ICOSIAN = _m([
    [1, 0, 0, 1, 0, 1, 0, 1],
    [0, 1, 0, 1, 0, 0, 1, 1],
    [0, 0, 1, 1, 0, 1, 1, 0],
    [0, 0, 0, 2, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 2, 0, 0],
    [0, 0, 0, 0, 0, 0, 2, 0],
    [0, 0, 0, 0, 0, 0, 0, 2],
], Fraction(1, 2))

LAMBDA_Q8SQ_N = _m([
    [2, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, 2, 2, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, 2, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 0, 0, 0, 0],
    [2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0],
    [2, 0, 2, 0, 0, 0, 0, 0, 2, 0, 2, 0, 0, 0, 0, 0],
    [2, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 2, 0],
    [2, 0, 0, 0, 0, 0, 0, -2, 0, 2, 0, 0, 0, 0, 2, 0],
    [2, 0, 0, 0, 0, 0, 0, -2, 0, 0, 2, 0, 0, -2, 0, 0],
    [2, 0, 0, 0, -2, 0, 0, 0, 2, 0, 0, 0, -2, 0, 0, 0],
    [2, 0, 0, 0, -2, 0, 0, 0, -2, 0, 0, 0, 2, 0, 0, 0],
    [2, 0, 0, -2, 0, 0, 0, 0, 2, 0, 0, -2, 0, 0, 0, 0],
    [2, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, -2],
    [2, 0, 0, 0, 0, 0, 0, -2, 0, 0, -2, 0, 0, 2, 0, 0],
    [2, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2, 0, -2, 0],
    [2, 0, 2, 0, -2, 0, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
], Fraction(1, 4))

LAMBDA_Q8SQ_M4 = linalg.mat([
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [0, 2, 0, 0, 0, 0, 0, 2, 0, 0, 0, 2, 0, 2, 0, 0],
    [0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 2, 0],
    [0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2],
    [0, 0, 0, 0, 2, 0, 0, 2, 0, 0, 0, 0, 0, 2, 2, 0],
    [0, 0, 0, 0, 0, 2, 0, 2, 0, 0, 0, 0, 0, 2, 0, 2],
    [0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 0, 0, 0, 0, 2, 2],
    [0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 2, 0, 2, 2, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 2, 0, 2, 0, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4],
])

LAMBDA_Q8SQ = linalg.scale(LAMBDA_Q8SQ_M4, Fraction(1, 4))

BARNES_WALL = _m([
    [1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 1, 1, 1],
    [0, 1, 0, 0, 0, 1, 1, 1, 1, 0, 1, 0, 1, 1, 0, 0],
    [0, 0, 1, 0, 0, 0, 1, 1, 1, 1, 0, 1, 0, 1, 1, 0],
    [0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 1, 1, 1, 0, 1],
    [0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 1, 1, 1, 1],
    [0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2],
    [0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2],
    [0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4],
], Fraction(1, 4))

Z2 = _m([[1, 0], [0, 1]])

# M * (M')^-1 as printed, for the containment check
LAMBDA_IN_BW_PRINTED = linalg.mat([
    [1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1, -2, -1, 5],
    [0, 2, 0, 0, 0, -1, -1, 0, -1, 0, -1, 1, -1, 0, 0, 2],
    [0, 0, 2, 0, 0, 0, -1, 0, -1, -1, 0, 0, 0, -1, 0, 2],
    [0, 0, 0, 2, 0, -1, 0, 1, -1, -1, 0, 0, -1, -1, 0, 2],
    [0, 0, 0, 0, 2, 0, -1, 1, 0, -1, -1, 0, -1, 0, 0, 1],
    [0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0, -1],
    [0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, -1],
    [0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1, -2],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, -1],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
])

F4_GRAM_PRINTED = _m([[2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 1, Fraction(-1, 2)],
                      [0, 0, Fraction(-1, 2), 1]])

E8_GRAM_PRINTED = _m([
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, 0],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, -1, 0],
    [0, 0, 0, 0, -1, 2, 0, 0],
    [0, 0, 0, 0, -1, 0, 2, -1],
    [0, 0, 0, 0, 0, 0, -1, 2],
])

LAMBDA_GRAM_PRINTED = _m([
    [4, 2, 2, 2, 2, 2, 2, 1, 2, 2, 2, 1, 2, 1, 1, 1],
    [2, 4, 2, 2, 2, 2, 1, 2, 2, 2, 1, 2, 1, 2, 0, 0],
    [2, 2, 4, 2, 2, 1, 2, 2, 2, 1, 2, 2, 1, 0, 2, 0],
    [2, 2, 2, 4, 1, 2, 2, 2, 1, 2, 2, 2, 1, 0, 0, 2],
    [2, 2, 2, 1, 4, 2, 2, 2, 2, 1, 1, 0, 2, 2, 2, 0],
    [2, 2, 1, 2, 2, 4, 2, 2, 1, 2, 1, 0, 2, 2, 0, 2],
    [2, 1, 2, 2, 2, 2, 4, 2, 1, 1, 2, 0, 2, 0, 2, 2],
    [1, 2, 2, 2, 2, 2, 2, 4, 0, 0, 0, 0, 0, 0, 0, 0],
    [2, 2, 2, 1, 2, 1, 1, 0, 4, 2, 2, 2, 2, 2, 2, 0],
    [2, 2, 1, 2, 1, 2, 1, 0, 2, 4, 2, 2, 2, 2, 0, 2],
    [2, 1, 2, 2, 1, 1, 2, 0, 2, 2, 4, 2, 2, 0, 2, 2],
    [1, 2, 2, 2, 0, 0, 0, 0, 2, 2, 2, 4, 0, 0, 0, 0],
    [2, 1, 1, 1, 2, 2, 2, 0, 2, 2, 2, 0, 4, 2, 2, 2],
    [1, 2, 0, 0, 2, 2, 0, 0, 2, 2, 0, 0, 2, 4, 0, 0],
    [1, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 2, 0, 4, 0],
    [1, 0, 0, 2, 0, 2, 2, 0, 0, 2, 2, 0, 2, 0, 0, 4],
], Fraction(1, 4))

PROP1_HNF_DIAGONAL = tuple(Fraction(x, 4) for x in (1, 2, 2, 2, 2, 2, 2, 4, 2, 2, 2, 4, 2, 4, 4, 4))


_OVERRIDES: dict[str, tuple] = {}


def override_builtin(name: str, rows) -> None:
    """Replace a catalogue entry (used by the corrupted-input negative control)."""
    _OVERRIDES[name] = linalg.mat(rows)


def clear_overrides() -> None:
    _OVERRIDES.clear()


def builtin_lattices() -> dict[str, GeneratorMatrix]:
    cat = _catalogue()
    cat.update({k: GeneratorMatrix(v) for k, v in _OVERRIDES.items()})
    return cat


def _catalogue() -> dict[str, GeneratorMatrix]:
    return {
        "F4": GeneratorMatrix(F4),
        "F4-alt": GeneratorMatrix(F4_ALT),
        "E8": GeneratorMatrix(E8),
        "E8-icosian": GeneratorMatrix(E8_ICOSIAN),
        "LambdaQ8sq": GeneratorMatrix(LAMBDA_Q8SQ),
        "LambdaQ8sq-N": GeneratorMatrix(LAMBDA_Q8SQ_N),
        "LambdaQ8sq-M4": GeneratorMatrix(LAMBDA_Q8SQ_M4),
        "BarnesWall": GeneratorMatrix(BARNES_WALL),
        "Z2": GeneratorMatrix(Z2),
    }


def load_lattice(name_or_path: str) -> GeneratorMatrix:
    cat = builtin_lattices()
    if name_or_path in cat:
        return cat[name_or_path]
    with open(name_or_path) as fh:
        return GeneratorMatrix(linalg.parse_matrix(fh.read()))
