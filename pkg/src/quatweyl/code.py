"""Binary linear codes of length 16 and the lattice-to-code map.

A codeword is an ``int`` whose bit ``i`` is coordinate ``i`` (0-based).
Bitstrings print coordinate 0 first, so ``0b1`` renders as ``1000...0``.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import lattice
from .groups import A8_GENERATORS, GC_GENERATORS, parse_cycles

LENGTH = 16


def word_from_bits(bits: Sequence[int] | str) -> int:
    if isinstance(bits, str):
        bits = [int(ch) for ch in bits if ch in "01"]
    if len(bits) != LENGTH:
        raise ValueError(f"expected {LENGTH} bits, got {len(bits)}")
    w = 0
    for i, b in enumerate(bits):
        if b & 1:
            w |= 1 << i
    return w


def word_to_bits(w: int) -> tuple[int, ...]:
    return tuple((w >> i) & 1 for i in range(LENGTH))


def bitstring(w: int) -> str:
    return "".join(str(b) for b in word_to_bits(w))


def weight(w: int) -> int:
    return bin(w).count("1")


def _lowest(w: int) -> int:
    return (w & -w).bit_length() - 1


def _echelon(words: Iterable[int]) -> tuple[int, ...]:
    """Reduced echelon basis, pivots at the lowest coordinate, sorted by pivot."""
    basis: dict[int, int] = {}
    for w in words:
        for p, b in basis.items():
            if (w >> p) & 1:
                w ^= b
        if not w:
            continue
        p = _lowest(w)
        for q in list(basis):
            if (basis[q] >> p) & 1:
                basis[q] ^= w
        basis[p] = w
    return tuple(basis[p] for p in sorted(basis))


@dataclass(frozen=True)
class BinaryCode:
    generator_rows: tuple
    length: int = LENGTH

    @property
    def dimension(self) -> int:
        return len(self.generator_rows)

    def __len__(self) -> int:
        return 1 << self.dimension

    def words(self) -> list[int]:
        out = [0]
        for r in self.generator_rows:
            out += [w ^ r for w in out]
        return sorted(out)

    def __contains__(self, w: int) -> bool:
        for r in self.generator_rows:
            if (w >> _lowest(r)) & 1:
                w ^= r
        return w == 0

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryCode) and self.generator_rows == other.generator_rows

    def __hash__(self):
        return hash(self.generator_rows)

    def to_text(self) -> str:
        return "\n".join(bitstring(r) for r in self.generator_rows) + "\n"


def span(rows: Iterable) -> BinaryCode:
    ws = [r if isinstance(r, int) else word_from_bits(r) for r in rows]
    return BinaryCode(_echelon(ws))


@dataclass(frozen=True)
class WeightDistribution:
    counts: tuple  # counts[w] for w = 0..length

    def as_dict(self) -> dict[int, int]:
        return {w: c for w, c in enumerate(self.counts) if c}

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def minimum_weight(self) -> int | None:
        return next((w for w, c in enumerate(self.counts) if w and c), None)

    def to_json(self) -> dict[str, int]:
        return {str(w): c for w, c in self.as_dict().items()}


def weight_distribution(code: BinaryCode, max_dimension: int = 24) -> WeightDistribution:
    if code.dimension > max_dimension:
        raise ValueError(f"dimension {code.dimension} too large to enumerate")
    cnt = Counter(weight(w) for w in code.words())
    return WeightDistribution(tuple(cnt.get(w, 0) for w in range(code.length + 1)))


def words_of_weight(code: BinaryCode, w: int) -> list[int]:
    return sorted((x for x in code.words() if weight(x) == w), key=bitstring, reverse=True)


def four_weight_words(code: BinaryCode) -> list[int]:
    return words_of_weight(code, 4)


def permute_word(w: int, perm: Sequence[int]) -> int:
    out = 0
    for i in range(len(perm)):
        if (w >> i) & 1:
            out |= 1 << perm[i]
    return out


def invariance_under(code: BinaryCode, perms: Iterable[Sequence[int]]) -> bool:
    """Coordinates move by ``i -> perm[i]``; checking the generators suffices."""
    return all(permute_word(r, p) in code for p in perms for r in code.generator_rows)


def intersection_histogram(words: Sequence[int]) -> dict[int, int]:
    """Sizes of pairwise support intersections over unordered pairs."""
    cnt = Counter()
    for a in range(len(words)):
        for b in range(a + 1, len(words)):
            cnt[weight(words[a] & words[b])] += 1
    return dict(sorted(cnt.items()))


def neighbour_profile(words: Sequence[int]) -> dict[tuple, int]:
    """For each word, how many others meet it in 0, 1, 2, 3 coordinates; histogram of those profiles."""
    prof = Counter()
    for a in words:
        c = Counter(weight(a & b) for b in words if b != a)
        prof[tuple(c.get(k, 0) for k in range(4))] += 1
    return dict(prof)


# --- the lattice-to-code map ---------------------------------------------------

M4_ROWS = tuple(tuple(int(x) for x in r) for r in lattice.LAMBDA_Q8SQ_M4)


def pi_map(coeffs: Sequence[int]) -> int:
    """Double the first coefficient, combine the M4 rows, halve, reduce mod 2."""
    if len(coeffs) != LENGTH:
        raise ValueError("expected 16 coefficients")
    if any(not isinstance(c, int) for c in coeffs):
        raise TypeError("coefficients must be integers")
    c = list(coeffs)
    c[0] *= 2
    v = [sum(c[i] * M4_ROWS[i][j] for i in range(LENGTH)) for j in range(LENGTH)]
    if any(x % 2 for x in v):
        raise ArithmeticError("combination is not all-even")  # cannot happen for M4
    return word_from_bits([(x // 2) % 2 for x in v])


def pi_stages(coeffs: Sequence[int]) -> tuple[tuple, tuple, tuple, tuple]:
    """The input vector and its images under f, g and h, as integer tuples."""
    x = tuple(sum(coeffs[i] * M4_ROWS[i][j] for i in range(LENGTH)) for j in range(LENGTH))
    c = list(coeffs)
    c[0] *= 2
    fx = tuple(sum(c[i] * M4_ROWS[i][j] for i in range(LENGTH)) for j in range(LENGTH))
    gx = tuple(v // 2 for v in fx)
    hx = tuple(v % 2 for v in gx)
    return x, fx, gx, hx


def pi_of_vector(v: Sequence) -> int:
    """``pi`` of an integer vector of the M4 lattice, via its basis coefficients."""
    c = lattice.member(lattice.LAMBDA_Q8SQ_M4, v)
    if c is None:
        raise ValueError("vector is not in the lattice spanned by M4")
    return pi_map(list(c))


def image_of_lattice() -> BinaryCode:
    return span(pi_map([int(i == k) for i in range(LENGTH)]) for k in range(LENGTH))


def check_pi_linearity(samples: int = 1000, seed: int = 0, spread: int = 5) -> tuple[bool, int]:
    """All basis pairs plus random integer combinations; returns (ok, checks made)."""
    checks = 0
    basis = [[int(i == k) for i in range(LENGTH)] for k in range(LENGTH)]
    for a in basis:
        for b in basis:
            s = [x + y for x, y in zip(a, b)]
            if pi_map(s) != pi_map(a) ^ pi_map(b):
                return False, checks
            checks += 1
    rng = random.Random(seed)
    for _ in range(samples):
        a = [rng.randint(-spread, spread) for _ in range(LENGTH)]
        b = [rng.randint(-spread, spread) for _ in range(LENGTH)]
        if pi_map([x + y for x, y in zip(a, b)]) != pi_map(a) ^ pi_map(b):
            return False, checks
        checks += 1
    return True, checks


# --- printed data ------------------------------------------------------------------

C16_ROWS = tuple(word_from_bits(s) for s in (
    "1000000100010111",
    "0100000100010100",
    "0010000100010010",
    "0001000100010001",
    "0000100100000110",
    "0000010100000101",
    "0000001100000011",
    "0000000010010110",
    "0000000001010101",
    "0000000000110011",
    "0000000000001111",
))

C16_WEIGHT_DISTRIBUTION = {0: 1, 4: 140, 6: 448, 8: 870, 10: 448, 12: 140, 16: 1}

# the listed weight-4 words (130 of the 140 appear in the list)
PRINTED_WEIGHT4_WORDS = tuple(word_from_bits(s) for s in """
    0100000100010100 1100000000000011 0010000100010010 1010000000000101 0110000000000110
    0001000100010001 1001000000000110 0101000000000101 0011000000000011 1111000000000000
    0000100100000110 1000100000010001 0100100000010010 0010100000010100 0110100100000000
    1001100100000000 0000010100000101 1000010000010010 0100010000010001 1010010100000000
    0001010000010100 0101010100000000 0000110000000011 1100110000000000 0011110000000000
    0000001100000011 1000001000010100 1100001100000000 0010001000010001 0001001000010010
    0011001100000000 0000101000000101 1010101000000000 0101101000000000 0000011000000110
    0110011000000000 1001011000000000 0000111100000000 0000000010010110 1000000110000001
    0100000110000010 0010000110000100 0110000010010000 1001000010010000 0000100110010000
    0100100010000100 0010100010000010 0001100010000001 1000010010000100 0010010010000001
    0001010010000010 1000001010000010 0100001010000001 0001001010000100 0000011010010000
    0000000001010101 1000000101000010 0100000101000001 1010000001010000 0001000101000100
    0101000001010000 1000100001000100 0010100001000001 0001100001000010 0000010101010000
    0100010001000100 0010010001000010 0001010001000001 1000001001000001 0100001001000010
    0010000100100001 0001000100100010 0011000000110000 1000100000100010 0100100000100001
    0001100000100100 1000010000100001 0100010000100010 0010010000100100 0000110000110000
    0000001100110000 0100001000100100 0010001000100010 0001001000100001 0000000010100101
    1010000010100000 0101000010100000 0000010110100000 0000101010100000 0000000001100110
    0110000001100000 1001000001100000 0000100101100000 0000011001100000 0000000011110000
    0000000000001111 1000000100011000 1100000000001100 1010000000001010 0110000000001001
    1001000000001001 0101000000001010 0011000000001100 0000100100001001 0001100000011000
    0000010100001010 0010010000011000 0000110000001100 0000001100001100 0100001000011000
    0000101000001010 0000011000001001 0000000010011001 0001000110001000 1000100010001000
    0100010010001000 0010001010001000 0000000001011010 0010000101001000 0100100001001000
    1000010001001000 0001001001001000 0000000011001100 0000000000111100 0100000100101000
    0010100000101000 0001010000101000 1000001000101000 0000000010101010 0000000001101001
""".split())


def c16() -> BinaryCode:
    return span(C16_ROWS)


def gc_perms() -> list[tuple]:
    return [parse_cycles(s, LENGTH, 0) for s in GC_GENERATORS]


def a8_perms() -> list[tuple]:
    return [parse_cycles(s, LENGTH, 0) for s in A8_GENERATORS]
