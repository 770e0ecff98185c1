from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import half_integers, rationals
from quatweyl import dualquat as D
from quatweyl import groups as G
from quatweyl import linalg, quat as QT

elems = st.lists(rationals, min_size=16, max_size=16).map(lambda c: D.DualQuatElem(tuple(c)))
half_elems = st.lists(half_integers(), min_size=16, max_size=16).map(
    lambda c: D.DualQuatElem(tuple(c)))

_BASIS = (QT.ONE, QT.I, QT.J, QT.K)


def _left_regular(x):
    """Column j holds the coefficients of x * e_j."""
    cols = [(x * e).coeffs for e in _BASIS]
    return linalg.mat([[cols[j][i] for j in range(4)] for i in range(4)])


_KRON = {(m, n): linalg.kron(_left_regular(_BASIS[m]), _left_regular(_BASIS[n]))
         for m in range(4) for n in range(4)}


def oracle_mul(a, b):
    """Product via the tensor square of the quaternion regular representation."""
    total = linalg.zeros(16, 16)
    for m in range(4):
        for n in range(4):
            c = a.coeff(m, n)
            if c:
                total = linalg.add(total, linalg.scale(_KRON[(m, n)], c))
    return D.DualQuatElem(linalg.matvec(total, b.coeffs))


@given(elems, elems)
def test_product_matches_tensor_oracle(a, b):
    assert D.dq_mul(a, b) == oracle_mul(a, b)


@given(elems, elems, elems)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@given(elems, elems)
def test_conjugation_antihomomorphism(a, b):
    assert D.dq_conj(a * b) == D.dq_conj(b) * D.dq_conj(a)


@given(half_elems, half_elems)
def test_half_integer_products_are_quarter_integral(a, b):
    assert (a * b).in_quarter_integers()


@given(elems, elems)
def test_matrix_representation_is_multiplicative(a, b):
    assert D.dq_to_matrix4(a * b) == linalg.matmul(D.dq_to_matrix4(a), D.dq_to_matrix4(b))


def test_factors_commute_and_satisfy_q8_relations():
    e = {n: D.parse_element(n) for n in ("i", "j", "k", "p", "q", "r")}
    minus = D.DualQuatElem.scalar(-1)
    for x in "ijkpqr":
        assert e[x] * e[x] == minus
    assert e["i"] * e["j"] == e["k"] and e["p"] * e["q"] == e["r"]
    for x in "ijk":
        for y in "pqr":
            assert e[x] * e[y] == e[y] * e[x]


def test_phi_roundtrip():
    x = D.parse_element("1/2 - ip + 3/4*kr")
    assert D.phi(D.phi_inv(x)) == x
    assert D.phi_inv(x)[0] == Fraction(1, 2)


@pytest.mark.parametrize("bad", ["1 + ix", "+", "i i", "1 +* j"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        D.parse_element(bad)


def test_generators_are_reflections_of_the_printed_form():
    gens = D.wf4_generators().as_list()
    assert all(g * g == D.ONE for g in gens)
    assert tuple(D.dq_to_matrix4(g) for g in gens) == D.WF4_PRINTED_MATRICES


def test_representation_is_faithful_on_the_group():
    abstract = G.closure(D.wf4_generators().as_list(), mul=D.dq_mul, key=lambda x: x.coeffs)
    images = {D.dq_to_matrix4(g) for g in abstract}
    assert len(abstract) == len(images) == 1152


def test_group_elements_have_unit_norm():
    abstract = G.closure(D.wf4_generators().as_list(), mul=D.dq_mul, key=lambda x: x.coeffs)
    assert all(sum(c * c for c in g.coeffs) == 1 for g in abstract)


@given(elems)
def test_text_roundtrip(x):
    assert D.parse_element(str(x)) == x
