from fractions import Fraction

import pytest
from hypothesis import given

from conftest import nonzero, quadext, rationals
from quatweyl.exact import (
    SIGMA, SQRT5, TAU, QuadExt5, format_quadext, format_rational, parse_quadext,
    parse_rational, parse_scalar, quadext_arith, rational_arith,
)


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    assert rational_arith(rational_arith(a, b, "add"), c, "add") == a + (b + c)
    assert rational_arith(a, rational_arith(b, c, "add"), "mul") == a * b + a * c


@given(quadext, quadext, quadext)
def test_quadext_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0


@given(nonzero(quadext))
def test_quadext_inverse(a):
    assert a * a.inverse() == 1
    assert a / a == QuadExt5(1, 0)


@given(quadext, quadext)
def test_galois_conjugation_is_a_ring_map(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert (a * b).field_norm() == a.field_norm() * b.field_norm()


def test_golden_ratio_constants():
    assert SQRT5 * SQRT5 == 5
    assert TAU * TAU == TAU + 1
    assert SIGMA * SIGMA == SIGMA + 1
    assert TAU + SIGMA == 1 and TAU * SIGMA == -1


def test_zero_division():
    with pytest.raises(ZeroDivisionError):
        QuadExt5(0, 0).inverse()
    with pytest.raises(ZeroDivisionError):
        rational_arith(1, 0, "div")
    with pytest.raises(ValueError):
        quadext_arith(1, 2, "pow")


@given(rationals)
def test_rational_roundtrip(x):
    assert parse_rational(format_rational(x)) == x


@given(quadext)
def test_quadext_roundtrip(x):
    assert parse_quadext(format_quadext(x)) == x
    assert parse_scalar(format_quadext(x)) == x


@pytest.mark.parametrize("text,value", [
    ("1/2+1/2*sqrt5", QuadExt5(Fraction(1, 2), Fraction(1, 2))),
    ("sqrt5", SQRT5),
    ("-3", QuadExt5(-3, 0)),
    ("2-sqrt5", QuadExt5(2, -1)),
])
def test_quadext_parse_forms(text, value):
    assert parse_quadext(text) == value


@pytest.mark.parametrize("bad", ["", "1/0", "x", "1.5", "1/2/3", "2*sqrt7"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)
