"""Finite groups given by generators: exact matrices or permutations.

Matrix groups are closed by breadth-first search keyed on the exact matrix
tuple.  Permutation groups get a deterministic Schreier-Sims base and
strong generating set, which is how the large orders are obtained.

Permutations are 0-based image tuples ``p[x]``.  Products act on the
right: ``perm_mul(a, b)`` applies ``a`` first, then ``b``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import linalg

Perm = tuple


class ClosureCapExceeded(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"closure exceeded the cap of {cap} elements")
        self.cap = cap


class OrbitCapExceeded(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"orbit exceeded the cap of {cap} points")
        self.cap = cap


# --- permutations ---------------------------------------------------------

def perm_identity(n: int) -> Perm:
    return tuple(range(n))


def perm_mul(a: Perm, b: Perm) -> Perm:
    return tuple(b[x] for x in a)


def perm_inv(a: Perm) -> Perm:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def perm_pow(a: Perm, k: int) -> Perm:
    if k < 0:
        a, k = perm_inv(a), -k
    out = perm_identity(len(a))
    for _ in range(k):
        out = perm_mul(out, a)
    return out


def is_perm_identity(a: Perm) -> bool:
    return all(i == x for i, x in enumerate(a))


def perm_order(a: Perm) -> int:
    from math import lcm

    seen = set()
    result = 1
    for start in range(len(a)):
        if start in seen:
            continue
        length = 0
        x = start
        while x not in seen:
            seen.add(x)
            x = a[x]
            length += 1
        result = lcm(result, length)
    return result


def commutator_perm(a: Perm, b: Perm) -> Perm:
    return perm_mul(perm_mul(perm_mul(a, b), perm_inv(a)), perm_inv(b))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int | None = None, base: int | None = None) -> Perm:
    """Parse cycle notation such as ``(1,3,15,13)(2,11,16,5)``.

    Stray commas between cycles are tolerated.  With ``base=None`` the
    labels are taken as 0-based when a 0 occurs and 1-based otherwise.
    """
    cycles = []
    rest = _CYCLE_RE.sub("", text).replace(",", "").strip()
    if rest:
        raise ValueError(f"unexpected text outside cycles: {rest!r}")
    for body in _CYCLE_RE.findall(text):
        pts = [int(t) for t in re.split(r"[,\s]+", body.strip()) if t]
        cycles.append(pts)
    pts_all = [p for c in cycles for p in c]
    if base is None:
        base = 0 if 0 in pts_all else 1
    if degree is None:
        degree = (max(pts_all) - base + 1) if pts_all else 0
    img = list(range(degree))
    seen = set()
    for c in cycles:
        c = [p - base for p in c]
        for p in c:
            if p < 0 or p >= degree:
                raise ValueError(f"point {p + base} outside 1..{degree}" if base else
                                 f"point {p} outside 0..{degree - 1}")
            if p in seen:
                raise ValueError(f"point {p + base} appears twice")
            seen.add(p)
        for x, y in zip(c, c[1:] + c[:1]):
            img[x] = y
    return tuple(img)


def format_cycles(p: Perm, base: int = 0) -> str:
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        out.append("(" + ",".join(str(x + base) for x in cyc) + ")")
    return "".join(out) or "()"


def pad_perm(p: Perm, degree: int) -> Perm:
    return tuple(p) + tuple(range(len(p), degree))


# --- Schreier-Sims ----------------------------------------------------------

@dataclass
class _Level:
    point: int
    gens: list = field(default_factory=list)
    trans: dict = field(default_factory=dict)
    trans_inv: dict = field(default_factory=dict)
    orbit: list = field(default_factory=list)
    checked: set = field(default_factory=set)

    def extend(self, n: int):
        if not self.trans:
            ident = perm_identity(n)
            self.trans[self.point] = ident
            self.trans_inv[self.point] = ident
            self.orbit.append(self.point)
        pos = 0
        while pos < len(self.orbit):
            beta = self.orbit[pos]
            u = self.trans[beta]
            for s in self.gens:
                gamma = s[beta]
                if gamma not in self.trans:
                    v = perm_mul(u, s)
                    self.trans[gamma] = v
                    self.trans_inv[gamma] = perm_inv(v)
                    self.orbit.append(gamma)
            pos += 1


@dataclass
class BSGS:
    degree: int
    base: list
    strong_generators: list
    orbit_sizes: list
    transversals: list = field(repr=False, default_factory=list)

    @property
    def order(self) -> int:
        out = 1
        for s in self.orbit_sizes:
            out *= s
        return out

    def contains(self, g: Perm) -> bool:
        g = tuple(g)
        for b, trans in zip(self.base, self.transversals):
            beta = g[b]
            if beta not in trans:
                return False
            g = perm_mul(g, trans[beta])
        return is_perm_identity(g)


def schreier_sims(generators: Sequence[Perm], degree: int) -> BSGS:
    """Deterministic Schreier-Sims with exhaustive Schreier-generator sifting.

    New base points are the lowest-index point moved by the element that
    forced the extension.  Schreier generators already sifted at a level are
    remembered, since later growth of the deeper levels cannot undo a
    successful sift.
    """
    gens = [tuple(g) for g in generators if not is_perm_identity(g)]
    levels: list[_Level] = []

    def first_moved(g):
        return next(i for i, x in enumerate(g) if x != i)

    for g in gens:
        if all(g[lv.point] == lv.point for lv in levels):
            levels.append(_Level(first_moved(g)))
    for depth, lv in enumerate(levels):
        lv.gens = [g for g in gens if all(g[levels[d].point] == levels[d].point for d in range(depth))]
        lv.extend(degree)

    def sift(g, start):
        for depth in range(start, len(levels)):
            lv = levels[depth]
            beta = g[lv.point]
            if beta not in lv.trans:
                return g, depth
            g = perm_mul(g, lv.trans_inv[beta])
        return g, len(levels)

    i = len(levels) - 1
    while i >= 0:
        lv = levels[i]
        restart = False
        pos = 0
        while pos < len(lv.orbit) and not restart:
            beta = lv.orbit[pos]
            u = lv.trans[beta]
            for si in range(len(lv.gens)):
                if (beta, si) in lv.checked:
                    continue
                lv.checked.add((beta, si))
                s = lv.gens[si]
                h = perm_mul(perm_mul(u, s), lv.trans_inv[s[beta]])
                if is_perm_identity(h):
                    continue
                h, j = sift(h, i + 1)
                if is_perm_identity(h):
                    continue
                if j == len(levels):
                    levels.append(_Level(first_moved(h)))
                for d in range(i + 1, j + 1):
                    levels[d].gens.append(h)
                    levels[d].extend(degree)
                i = j
                restart = True
                break
            pos += 1
        if not restart:
            i -= 1

    strong = []
    seen = set()
    for lv in levels:
        for g in lv.gens:
            if g not in seen:
                seen.add(g)
                strong.append(g)
    return BSGS(
        degree=degree,
        base=[lv.point for lv in levels],
        strong_generators=strong,
        orbit_sizes=[len(lv.orbit) for lv in levels],
        transversals=[lv.trans_inv for lv in levels],
    )


@dataclass
class PermGroup:
    degree: int
    generators: list
    label_base: int = 0
    _bsgs: BSGS | None = field(default=None, repr=False)

    def __post_init__(self):
        self.generators = [pad_perm(tuple(g), self.degree) for g in self.generators]
        for g in self.generators:
            if sorted(g) != list(range(self.degree)):
                raise ValueError("generator is not a bijection")

    @classmethod
    def from_cycles(cls, texts: Iterable[str], degree: int, base: int) -> "PermGroup":
        return cls(degree, [parse_cycles(t, degree, base) for t in texts], label_base=base)

    @property
    def bsgs(self) -> BSGS:
        if self._bsgs is None:
            self._bsgs = schreier_sims(self.generators, self.degree)
        return self._bsgs

    def order(self) -> int:
        return self.bsgs.order

    def elements(self, cap: int = 10**6) -> list:
        if not self.generators:
            return [perm_identity(self.degree)]
        return closure(self.generators, mul=perm_mul, cap=cap, identity=perm_identity(self.degree))

    def format(self, g: Perm) -> str:
        return format_cycles(g, self.label_base)


def perm_closure_order(group: PermGroup) -> int:
    return group.order()


# --- matrix groups -----------------------------------------------------------

def closure(generators, mul: Callable = linalg.matmul, key: Callable = lambda x: x,
            cap: int = 10**6, identity=None) -> list:
    """All products of the generators, BFS order, canonically sorted by key."""
    seen = {}
    frontier = []
    start = list(generators) if identity is None else [identity] + list(generators)
    for g in start:
        k = key(g)
        if k not in seen:
            seen[k] = g
            frontier.append(g)
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = mul(x, g)
                k = key(y)
                if k not in seen:
                    seen[k] = y
                    nxt.append(y)
                    if len(seen) > cap:
                        raise ClosureCapExceeded(cap)
        frontier = nxt
    return [seen[k] for k in sorted(seen)]


@dataclass
class MatGroup:
    generators: list
    orthogonal: bool = False
    elements: list | None = None

    def __post_init__(self):
        self.generators = [linalg.mat(g) for g in self.generators]
        n = len(self.generators[0]) if self.generators else 0
        for g in self.generators:
            if linalg.det(g) == 0:
                raise ValueError("generator is singular")
            if self.orthogonal and not linalg.is_orthogonal(g):
                raise ValueError("generator flagged orthogonal is not")
        self.dim = n

    def close(self, cap: int = 10**6) -> list:
        if self.elements is None:
            self.elements = closure(self.generators, cap=cap,
                                    identity=linalg.identity(self.dim))
        return self.elements

    def order(self, cap: int = 10**6) -> int:
        return len(self.close(cap))


def is_group(elements: Sequence, mul: Callable = linalg.matmul,
             inv: Callable = linalg.inverse, identity=None) -> bool:
    """Post-hoc check: identity present, closed under product and inverse."""
    s = set(elements)
    if identity is not None and identity not in s:
        return False
    for a in elements:
        if inv(a) not in s:
            return False
        for b in elements:
            if mul(a, b) not in s:
                return False
    return True


def element_order(g, cap: int = 10**6, mul: Callable = linalg.matmul,
                  is_identity: Callable = linalg.is_identity) -> int:
    x = g
    for k in range(1, cap + 1):
        if is_identity(x):
            return k
        x = mul(x, g)
    raise ClosureCapExceeded(cap)


def center(elements: Sequence, generators: Sequence, mul: Callable = linalg.matmul) -> list:
    return [z for z in elements if all(mul(z, g) == mul(g, z) for g in generators)]


def commutator(a, b):
    return linalg.matmul(linalg.matmul(a, b), linalg.matmul(linalg.inverse(a), linalg.inverse(b)))


# --- relations -----------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<name>[A-Za-z]+\d*)|(?P<sym>[()\[\],^])|(?P<num>-?\d+))")


def parse_word(text: str, names: Sequence[str]) -> list[int]:
    """Parse a group word into signed 1-based generator indices.

    Grammar: juxtaposed factors; a factor is a generator name, a
    parenthesised word, or a commutator ``[u,v] = u v u^-1 v^-1``; any
    factor may carry ``^n`` with n possibly negative.  ``1`` is the empty
    word.
    """
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse word at {text[pos:]!r}")
        toks.append(m.group("name") or m.group("sym") or m.group("num"))
        pos = m.end()
    idx = 0

    def inverse(w):
        return [-x for x in reversed(w)]

    def word():
        nonlocal idx
        out = []
        while idx < len(toks) and toks[idx] not in (")", "]", ","):
            out.extend(factor())
        return out

    def factor():
        nonlocal idx
        t = toks[idx]
        idx += 1
        if t == "(":
            w = word()
            expect(")")
        elif t == "[":
            a = word()
            expect(",")
            b = word()
            expect("]")
            w = a + b + inverse(a) + inverse(b)
        elif t == "1":
            w = []
        elif t in names:
            w = [names.index(t) + 1]
        else:
            raise ValueError(f"unknown generator {t!r}")
        if idx < len(toks) and toks[idx] == "^":
            idx += 1
            n = int(toks[idx])
            idx += 1
            w = (w if n >= 0 else inverse(w)) * abs(n)
        return w

    def expect(sym):
        nonlocal idx
        if idx >= len(toks) or toks[idx] != sym:
            raise ValueError(f"expected {sym!r} in {text!r}")
        idx += 1

    w = word()
    if idx != len(toks):
        raise ValueError(f"trailing tokens in {text!r}")
    return w


def evaluate_word(gens: Sequence, word: Sequence[int], mul: Callable = linalg.matmul,
                  inv: Callable = linalg.inverse, identity=None):
    if identity is None:
        identity = linalg.identity(len(gens[0]))
    out = identity
    invs = {}
    for x in word:
        if x > 0:
            out = mul(out, gens[x - 1])
        else:
            if x not in invs:
                invs[x] = inv(gens[-x - 1])
            out = mul(out, invs[x])
    return out


def check_relations(gens: Sequence, relations: Sequence, names: Sequence[str] | None = None,
                    mul: Callable = linalg.matmul, inv: Callable = linalg.inverse,
                    identity=None, is_identity: Callable = linalg.is_identity) -> list[bool]:
    """Evaluate each relation word; True where it reduces to the identity.

    A relation is either a list of signed 1-based indices or text parsed
    with ``names`` (default ``g1, g2, ...``).
    """
    names = list(names) if names is not None else [f"g{i + 1}" for i in range(len(gens))]
    out = []
    for rel in relations:
        w = parse_word(rel, names) if isinstance(rel, str) else list(rel)
        out.append(is_identity(evaluate_word(gens, w, mul, inv, identity)))
    return out


WF4_RELATIONS = (
    "e1^2", "e2^2", "e3^2", "e4^2", "(e1 e2)^2", "[e1,e3]", "[e2,e4]", "[e1,e4]",
    "(e2 e3)^4", "(e3 e4)^3",
)
WF4_ATLAS_RELATIONS = (
    "e1^2", "e2^2", "e3^2", "e4^2", "(e1 e2)^3", "[e1,e3]", "[e1,e4]",
    "(e2 e3)^4", "[e2,e4]", "(e3 e4)^3",
)


@dataclass
class CoxeterReport:
    pairwise_order: list

    def is_symmetric(self) -> bool:
        n = len(self.pairwise_order)
        return all(self.pairwise_order[i][j] == self.pairwise_order[j][i]
                   for i in range(n) for j in range(n))

    def format(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.pairwise_order)


def coxeter_matrix(gens: Sequence, cap: int = 10**6) -> CoxeterReport:
    """Orders of g_i g_j; the diagonal holds the order of g_i itself."""
    n = len(gens)
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            g = gens[i] if i == j else linalg.matmul(gens[i], gens[j])
            table[i][j] = element_order(g, cap)
    return CoxeterReport(table)


# --- matrix action on an orbit ----------------------------------------------------

@dataclass
class OrbitAction:
    points: list
    group: PermGroup
    faithful: bool


def matrix_action_to_perm(gens: Sequence, seeds: Sequence, cap: int = 10**6) -> OrbitAction:
    """Orbit of the seed vectors under v -> g v, with each g as a permutation.

    The action is faithful when the orbit spans the whole space, since then
    only the identity matrix fixes every orbit point.
    """
    gens = [linalg.mat(g) for g in gens]
    index = {}
    points = []
    for s in seeds:
        s = linalg.vec(s)
        if s not in index:
            index[s] = len(points)
            points.append(s)
    pos = 0
    while pos < len(points):
        v = points[pos]
        for g in gens:
            w = linalg.matvec(g, v)
            if w not in index:
                index[w] = len(points)
                points.append(w)
                if len(points) > cap:
                    raise OrbitCapExceeded(cap)
        pos += 1
    perms = [tuple(index[linalg.matvec(g, v)] for v in points) for g in gens]
    dim = len(points[0]) if points else 0
    faithful = linalg.rank(points) == dim
    return OrbitAction(points, PermGroup(len(points), perms), faithful)


# --- listed generators and small-group checks -------------------------------------

C_GENERATORS = (
    "(1,2,10,9)(3,11,12,4)(5,6,14,13)(7,15,16,8)",
    "(1,4,12,9)(2,3,11,10)(5,8,16,13)(6,7,15,14)",
    "(1,5,13,9)(2,6,14,10)(3,7,15,11)(4,8,16,12)",
)
TAU_IMAGES = {
    "i": "(1,3,15,13)(2,11,16,5)(4,7,14,9)(6,10,12,8)",
    "j": "(1,12,15,6)(2,9,16,7)(3,10,13,8)(4,11,14,5)",
    "k": "(1,10,15,8)(2,14,16,4)(3,6,13,12)(5,9,11,7)",
    "p": "(1,8,15,10)(2,5,16,11)(3,6,13,12)(4,7,14,9)",
    "q": "(1,13,15,3),(2,9,16,7),(4,5,14,11),(6,10,12,8)",
    "r": "(1,6,15,12)(2,14,16,4)(3,10,13,8)(5,7,11,9)",
    "-1": "(1,15)(2,16)(3,13)(4,14)(5,11)(6,12)(7,9)(8,10)",
}
GC_GENERATORS = (
    "(0,1)(2,7,9,11,13,4,14,3,6,8,10,12,5,15)",
    "(0,15,8,11,14,1,6,5)(2,3,10,7,12,13,4,9)",
)
A8_GENERATORS = (
    "(1,4,2,7)(5,6)(8,13,11,14)(12,15)",
    "(1,6)(2,14)(3,8)(4,15)(5,9)(10,13)",
)


def verify_q8sq_perm_rep() -> dict:
    t = {name: parse_cycles(text, 16, 1) for name, text in TAU_IMAGES.items()}
    e = perm_identity(16)
    minus = t["-1"]
    c_group = PermGroup.from_cycles(C_GENERATORS, 16, 1)
    c_prime = PermGroup(16, [t["i"], t["j"], t["p"], t["q"]], label_base=1)
    checks = {
        "i*j == k": perm_mul(t["i"], t["j"]) == t["k"],
        "j*i == -k": perm_mul(t["j"], t["i"]) == perm_mul(minus, t["k"]),
        "p*q == r": perm_mul(t["p"], t["q"]) == t["r"],
        "q*p == -r": perm_mul(t["q"], t["p"]) == perm_mul(minus, t["r"]),
        "(-1)^2 == 1": perm_mul(minus, minus) == e,
    }
    for a in "ijk":
        checks[f"{a}^2 == -1"] = perm_mul(t[a], t[a]) == minus
    for a in "pqr":
        checks[f"{a}^2 == -1"] = perm_mul(t[a], t[a]) == minus
    for a in "ijk":
        for b in "pqr":
            checks[f"[{a},{b}] == 1"] = is_perm_identity(commutator_perm(t[a], t[b]))
    c_elements = c_group.elements()
    c_center = center(c_elements, c_group.generators, mul=perm_mul)
    return {
        "checks": checks,
        "order_C": c_group.order(),
        "order_C_naive": len(c_elements),
        "order_C_prime": c_prime.order(),
        "order_C_prime_naive": len(c_prime.elements()),
        "minus_one_in_C": c_group.bsgs.contains(minus),
        "minus_one_central_in_C": all(perm_mul(minus, g) == perm_mul(g, minus)
                                      for g in c_group.generators),
        "center_C": [format_cycles(z, 1) for z in c_center],
        "center_C_contains_minus_one": minus in c_center,
    }


B2_I = linalg.mat([[0, 1], [-1, 0]])
B2_J = linalg.mat([[1, 0], [0, -1]])


def verify_b2_construction() -> dict:
    group = MatGroup([B2_I, B2_J], orthogonal=True)
    minus = linalg.neg(linalg.identity(2))
    return {
        "order": group.order(),
        "I^2 == -1": linalg.matmul(B2_I, B2_I) == minus,
        "I^4 == 1": linalg.is_identity(linalg.matpow(B2_I, 4)),
        "J^2 == 1": linalg.is_identity(linalg.matpow(B2_J, 2)),
        "IJ == -JI": linalg.matmul(B2_I, B2_J) == linalg.neg(linalg.matmul(B2_J, B2_I)),
    }


def gc_group() -> PermGroup:
    return PermGroup.from_cycles(GC_GENERATORS, 16, 0)


def a8_subgroup() -> PermGroup:
    return PermGroup.from_cycles(A8_GENERATORS, 16, 0)
