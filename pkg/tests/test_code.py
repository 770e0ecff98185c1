import pytest
from hypothesis import given, strategies as st

from quatweyl import code as C
from quatweyl import lattice as L
from quatweyl import linalg

coeffs = st.lists(st.integers(-9, 9), min_size=16, max_size=16)
words = st.integers(min_value=0, max_value=(1 << 16) - 1)
C16 = C.c16()


def test_size_dimension_and_weights():
    assert C16.dimension == 11 and len(C16) == 2048
    wd = C.weight_distribution(C16)
    assert wd.as_dict() == C.C16_WEIGHT_DISTRIBUTION
    assert wd.total == 2048 and wd.minimum_weight == 4
    assert all(wd.counts[w] == wd.counts[16 - w] for w in range(17))


@given(words)
def test_bit_roundtrip(w):
    assert C.word_from_bits(C.bitstring(w)) == w
    assert C.word_from_bits(C.word_to_bits(w)) == w


def test_bit_order_puts_coordinate_zero_first():
    assert C.bitstring(1) == "1" + "0" * 15


@given(st.lists(words, max_size=8))
def test_span_contains_its_generators(ws):
    code = C.span(ws)
    assert all(w in code for w in ws)
    assert len(code.words()) == len(code) == 2 ** code.dimension
    assert C.span(code.words()) == code


@given(coeffs, coeffs)
def test_pi_is_linear(a, b):
    assert C.pi_map([x + y for x, y in zip(a, b)]) == C.pi_map(a) ^ C.pi_map(b)


def test_pi_linearity_sweep():
    ok, checks = C.check_pi_linearity(samples=1000)
    assert ok and checks == 256 + 1000


def test_pi_worked_examples():
    e = [[int(i == k) for i in range(16)] for k in range(16)]
    assert C.bitstring(C.pi_map(e[12])) == "0" * 12 + "1111"
    assert C.pi_map(e[15]) == 0
    assert C.bitstring(C.pi_map(e[0])) == "1" * 16
    assert C.pi_map([2] + [0] * 15) == 0
    x, fx, gx, hx = C.pi_stages(e[0])
    assert all(v == 2 for v in fx) and hx == (1,) * 16


def test_pi_of_vector_uses_lattice_coefficients():
    v = linalg.vecmat([0] * 12 + [1, 0, 0, 0], L.LAMBDA_Q8SQ_M4)
    assert C.pi_of_vector(v) == C.pi_map([0] * 12 + [1, 0, 0, 0])
    with pytest.raises(ValueError):
        C.pi_of_vector([1] + [0] * 15)


def test_pi_rejects_bad_input():
    with pytest.raises(ValueError):
        C.pi_map([0] * 15)
    with pytest.raises(TypeError):
        C.pi_map([0.5] + [0] * 15)


def test_image_is_the_printed_code():
    assert C.image_of_lattice() == C16


def test_invariance_group():
    assert C.invariance_under(C16, C.gc_perms())
    assert C.invariance_under(C16, C.a8_perms())
    swap = tuple([1, 0] + list(range(2, 16)))
    assert not C.invariance_under(C16, [swap])


def test_weight_four_words():
    ws = C.four_weight_words(C16)
    assert len(ws) == 140
    printed = set(C.PRINTED_WEIGHT4_WORDS)
    assert len(printed) == 130 and printed <= set(ws)
    hist = C.intersection_histogram(ws)
    assert hist == {0: 2730, 1: 4480, 2: 2520}
    assert C.neighbour_profile(ws) == {(39, 64, 36, 0): 140}


def test_code_text():
    assert C16.to_text().splitlines()[0] == "1000000100010111"
