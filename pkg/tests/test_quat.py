from fractions import Fraction

from hypothesis import given, strategies as st

from conftest import rationals
from quatweyl import lattice, linalg, quat as QT
from quatweyl.exact import QuadExt5

quaternions = st.builds(QT.Quaternion, rationals, rationals, rationals, rationals)
UNITS = QT.unit_group_2A4()
unit = st.sampled_from(UNITS)


@given(quaternions, quaternions)
def test_norm_multiplicative(a, b):
    assert QT.quat_norm(a * b) == QT.quat_norm(a) * QT.quat_norm(b)


@given(quaternions, quaternions, quaternions)
def test_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(quaternions, quaternions)
def test_conjugation_reverses_products(a, b):
    assert QT.quat_conj(a * b) == QT.quat_conj(b) * QT.quat_conj(a)


def test_hamilton_relations():
    minus = -QT.ONE
    assert QT.I * QT.I == minus and QT.J * QT.J == minus and QT.K * QT.K == minus
    assert QT.I * QT.J == QT.K and QT.J * QT.I == -QT.K
    assert QT.I * QT.J * QT.K == minus


@given(unit, unit)
def test_rho4_homomorphism(a, b):
    assert QT.rho4(a * b) == linalg.matmul(QT.rho4(a), QT.rho4(b))


def test_rho4_orthogonal_and_injective():
    mats = [QT.rho4(u) for u in UNITS]
    assert all(linalg.is_orthogonal(m) for m in mats)
    assert len(set(mats)) == 24


def test_unit_group_is_the_hurwitz_units():
    assert {u.coeffs for u in UNITS} == set(QT.HURWITZ_UNIT_VECTORS)
    assert all(QT.is_hurwitz(u) and QT.quat_norm(u) == 1 for u in UNITS)
    # brute force: every Hurwitz quaternion of norm 1
    halves = [Fraction(n, 2) for n in range(-2, 3)]
    brute = {(a, b, c, d) for a in halves for b in halves for c in halves for d in halves
             if QT.is_hurwitz(QT.Quaternion(a, b, c, d)) and a * a + b * b + c * c + d * d == 1}
    assert brute == set(QT.HURWITZ_UNIT_VECTORS)


def test_plus_generator_gives_same_group():
    assert {u.coeffs for u in QT.unit_group_2A4(QT.OMEGA)} == set(QT.HURWITZ_UNIT_VECTORS)


def test_icosian_group_and_relations():
    grp = QT.icosian_group()
    assert len(grp) == 120
    one = QT.icosian(QT.ONE)
    x, i, w = QT.ICOSIAN_X, QT.icosian(QT.I), QT.icosian(QT.OMEGA)
    assert x ** 4 == one and w ** 6 == one and (x * i * w) ** 5 == one
    assert (i * x * w * w) ** 5 == -one
    assert all(QT.quat_norm(g) == QuadExt5(1, 0) for g in grp)


def test_e8_embedding_lands_in_lattice():
    e8 = lattice.E8_ICOSIAN
    images = [QT.e8_embed(g) for g in QT.icosian_group()]
    assert len(set(images)) == 120
    assert all(sum(c * c for c in v) == 1 for v in images)
    assert all(lattice.member(e8, v) is not None for v in images)


def test_group_to_json_is_text():
    js = QT.group_to_json(UNITS[:2])
    assert all(isinstance(s, str) for row in js for s in row)
