from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import rationals
from quatweyl import linalg

square3 = st.lists(st.lists(rationals, min_size=3, max_size=3), min_size=3, max_size=3)


@given(square3)
def test_det_matches_sympy(rows):
    m = linalg.mat(rows)
    assert linalg.det(m) == sympy.Matrix(rows).det()


@given(square3)
def test_inverse(rows):
    m = linalg.mat(rows)
    if linalg.det(m) == 0:
        with pytest.raises(ZeroDivisionError):
            linalg.inverse(m)
        return
    assert linalg.is_identity(linalg.matmul(m, linalg.inverse(m)))


@given(square3, square3)
def test_det_multiplicative(a, b):
    a, b = linalg.mat(a), linalg.mat(b)
    assert linalg.det(linalg.matmul(a, b)) == linalg.det(a) * linalg.det(b)


@given(square3)
def test_matrix_text_roundtrip(rows):
    m = linalg.mat(rows)
    assert linalg.parse_matrix(linalg.format_matrix(m)) == m


def test_parse_comments_and_blank_lines():
    text = "# header\n1 1/2\n\n0 -3  # trailing\n"
    assert linalg.parse_matrix(text) == linalg.mat([[1, Fraction(1, 2)], [0, -3]])


@pytest.mark.parametrize("text,line,col", [
    ("1 2\n3 q\n", 2, 2),
    ("1 2\n3\n", 2, 1),
    ("1/0 2\n", 1, 1),
])
def test_parse_error_location(text, line, col):
    with pytest.raises(linalg.MatrixFormatError) as err:
        linalg.parse_matrix(text)
    assert (err.value.line, err.value.column) == (line, col)


def test_kron_and_blocks():
    a = linalg.mat([[0, 1], [1, 0]])
    k = linalg.kron(a, linalg.identity(2))
    assert k[0][2] == 1 and k[0][0] == 0
    b = linalg.blocks(a, linalg.zeros(2, 2), linalg.zeros(2, 2), a)
    assert b == linalg.block_diag(a, a)
    assert linalg.rank(b) == 4
