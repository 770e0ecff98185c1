from fractions import Fraction

from hypothesis import given, strategies as st

from conftest import rationals
from quatweyl import linalg
from quatweyl import octonion as O

octs = st.lists(rationals, min_size=8, max_size=8).map(lambda c: O.Octonion(tuple(c)))


@given(octs, octs)
def test_norm_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()


@given(octs, octs)
def test_alternative(a, b):
    assert (a * a) * b == a * (a * b)
    assert (b * a) * a == b * (a * a)
    assert O.is_alternative(a, b)


@given(octs, octs)
def test_conjugation_reverses_products(a, b):
    assert (a * b).conj() == b.conj() * a.conj()


@given(octs)
def test_left_multiplication_matrix(a):
    u = O.Octonion.basis(3)
    assert linalg.matvec(O.left_mult_matrix(a), u.coeffs) == (a * u).coeffs


def test_table_shape():
    e = [O.Octonion.basis(a) for a in range(8)]
    for a in range(1, 8):
        assert e[a] * e[a] == -e[0]
        for b in range(1, 8):
            if a != b:
                assert e[a] * e[b] == -(e[b] * e[a])


def test_not_associative():
    a, b, c = O.nonassociativity_witness()
    e = [O.Octonion.basis(x) for x in range(8)]
    assert (e[a] * e[b]) * e[c] != e[a] * (e[b] * e[c])
    assert O.associator_failures() == 168


def test_unit_multiplications_are_orthogonal():
    assert all(linalg.is_orthogonal(O.zeta(a)) for a in range(8))
    assert all(linalg.is_orthogonal(m) for m in O.regenerated().values())


def test_printed_matrices():
    diffs = O.diff_against_printed()
    assert {n for n, d in diffs.items() if d} == {"eta"}
    assert O.PRINTED["eta"] == linalg.neg(O.eta()) == linalg.transpose(O.eta())


def test_block_forms():
    diffs = O.diff_against_block_forms()
    assert {n for n, d in diffs.items() if d} == {"zeta3", "zeta7", "eta"}
    assert O.xi(1) == O.PRINTED["xi1"] and O.xi(2) == O.PRINTED["xi2"]


def test_eta_is_half_the_sum():
    s = linalg.add(linalg.add(O.zeta(1), O.zeta(2)), linalg.add(O.zeta(3), O.zeta(4)))
    assert O.eta() == linalg.scale(s, Fraction(1, 2))


def test_block_expression_parser():
    m = O.block_expr("i")
    assert len(m) == 4 and linalg.is_orthogonal(m)
    assert O.block_expr("E") == linalg.identity(4)
