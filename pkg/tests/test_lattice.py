from fractions import Fraction
from itertools import product

import pytest
from hypothesis import assume, given, strategies as st

from quatweyl import dualquat as D
from quatweyl import lattice as L
from quatweyl import linalg

int_rows = st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=3, max_size=5)
rat_square = st.lists(st.lists(st.fractions(-6, 6, max_denominator=4), min_size=3, max_size=3),
                      min_size=3, max_size=3)


@pytest.fixture(scope="module")
def lambda_shells():
    return L.shortest_vectors(L.LAMBDA_Q8SQ, 1)


@given(int_rows)
def test_hnf_spans_the_same_lattice(rows):
    assume(linalg.rank(linalg.mat(rows)) == 3)
    h = L.hnf(rows)
    for r in rows:
        assert L.member(h, r) is not None
    for r in h.rows:
        c = L.member(rows, r)
        assert c is not None and linalg.vecmat(c, rows) == r


@given(rat_square)
def test_hnf_shape_and_det_invariance(rows):
    assume(linalg.det(linalg.mat(rows)) != 0)
    h = L.hnf(rows).rows
    assert abs(L.det_lattice(h)) == abs(L.det_lattice(rows))
    assert L.contains(h, rows) and L.contains(rows, h)
    for i in range(3):
        assert h[i][i] > 0
        assert all(h[i][j] == 0 for j in range(i))
        assert all(0 <= h[k][i] < h[i][i] for k in range(i))
    assert L.hnf(h).rows == h


def test_rank_deficient_input_is_reported():
    with pytest.raises(L.LatticeError):
        L.hnf([[1, 2, 3], [2, 4, 6], [0, 0, 1]])
    with pytest.raises(L.LatticeError):
        L.GeneratorMatrix([[1, 2], [2, 4]])
    assert L.hnf([[1, 2, 3], [2, 4, 6]], allow_deficient=True).rank == 1


@given(st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_member_recovers_coefficients(c):
    v = linalg.vecmat(c, L.F4)
    assert L.member(L.F4, v) == tuple(c)


def test_member_rejects_non_lattice_vector():
    assert L.member(L.Z2, (Fraction(1, 2), 0)) is None


def test_gram_validation():
    assert L.gram(L.F4).entries == L.F4_GRAM_PRINTED
    assert L.gram(L.LAMBDA_Q8SQ).entries == L.LAMBDA_GRAM_PRINTED
    with pytest.raises(L.LatticeError):
        L.GramMatrix(linalg.mat([[1, 2], [2, 1]]))
    with pytest.raises(L.LatticeError):
        L.GramMatrix(linalg.mat([[1, 0], [1, 1]]))


def test_e8_basis_gram_differs_from_the_display_in_one_pair():
    g = L.gram(L.E8).entries
    diffs = [(i, j) for i in range(8) for j in range(i, 8) if g[i][j] != L.E8_GRAM_PRINTED[i][j]]
    assert diffs == [(0, 7)]
    assert abs(L.det_lattice(L.E8)) == 1


def test_z2_theta_against_brute_force():
    bound = 13
    brute = {}
    for a, b in product(range(-4, 5), repeat=2):
        n = a * a + b * b
        if n <= bound:
            brute[n] = brute.get(n, 0) + 1
    th = L.theta_prefix(L.Z2, bound)
    assert {int(k): v for k, v in th.pairs()} == brute
    assert th.series()[:6] == [1, 4, 4, 0, 4, 8]


@pytest.mark.parametrize("name,bound", [("F4", 3), ("E8", 4), ("E8-icosian", 2)])
def test_gram_enumeration_oracle(name, bound):
    m = L.builtin_lattices()[name].rows
    direct = L.shortest_vectors(m, bound)
    coeffs = L.enumerate_by_gram(L.gram(m), bound)
    assert {k: len(v) for k, v in direct.items()} == {k: len(v) for k, v in coeffs.items()}
    for norm, cs in coeffs.items():
        assert sorted(linalg.vecmat(c, m) for c in cs) == direct[norm]


def test_theta_counts_are_basis_independent():
    assert L.theta_prefix(L.F4, 5).series() == L.theta_prefix(L.F4_ALT, 5).series() \
        == [1, 24, 24, 96, 24, 144]
    h = L.hnf(L.E8).rows
    assert L.theta_prefix(h, 4).pairs() == L.theta_prefix(L.E8, 4).pairs()


def test_theta_prefix_refuses_norms_beyond_bound():
    with pytest.raises(L.LatticeError):
        L.theta_prefix(L.Z2, 2).coefficient(3)


def test_enumeration_cap():
    with pytest.raises(L.VectorCapExceeded):
        L.shortest_vectors(L.E8, 2, cap=100)


@pytest.mark.parametrize("name", ["F4", "E8"])
def test_shells_are_symmetric(name):
    for vecs in L.shortest_vectors(L.builtin_lattices()[name], 2).values():
        s = set(vecs)
        assert all(tuple(-x for x in v) in s for v in vecs)


def test_minimal_norms():
    assert L.minimal_norm(L.E8) == 2
    assert L.minimal_norm(L.E8_ICOSIAN) == 1
    assert L.minimal_norm(L.F4) == 1


@given(st.lists(st.integers(-7, 7), min_size=16, max_size=16))
def test_scaled_lambda_vectors_have_uniform_parity(c):
    v = linalg.vecmat(c, L.LAMBDA_Q8SQ_M4)
    assert len({int(x) % 2 for x in v}) == 1


def test_no_short_vector_has_few_nonzero_halves(lambda_shells):
    for vecs in lambda_shells.values():
        for v in vecs:
            t = L.shell_type(v)
            values = {e[0] for e in t.entries}
            if values <= {Fraction(1, 2), Fraction(-1, 2), 0}:
                nonzero = sum(cnt for val, _, cnt in t.entries if val)
                assert nonzero >= 4


def test_lambda_structure(lambda_shells):
    assert L.hnf(L.LAMBDA_Q8SQ_N).rows == L.LAMBDA_Q8SQ
    rows = [D.phi_inv(e) for e in D.prop1_elements()]
    assert tuple(rows) == L.LAMBDA_Q8SQ_N
    assert L.contains(L.BARNES_WALL, L.LAMBDA_Q8SQ)
    assert not L.contains(L.LAMBDA_Q8SQ, L.BARNES_WALL)
    assert linalg.matmul(L.LAMBDA_Q8SQ, linalg.inverse(L.BARNES_WALL)) == L.LAMBDA_IN_BW_PRINTED
    assert list(lambda_shells) == [1] and len(lambda_shells[1]) == 4320


def test_shell_type_formatting():
    v = [Fraction(1, 4)] * 15 + [Fraction(-1, 4)]
    assert L.shell_type(v, [Fraction(1, 4)]).format() == "(±1^16)/4"
    assert L.shell_type(v).format() == "(1^15,-1^1)/4"
    w = [Fraction(1, 2)] * 2 + [0] * 12 + [Fraction(-1, 2)] * 2
    assert L.shell_type(w).format() == "(2^2,0^12,-2^2)/4"
    js = L.shell_to_json(1, [v, w], [Fraction(1, 4)])
    assert js["count"] == 2 and {t["signature"] for t in js["types"]} == \
        {"(±1^16)/4", "(2^2,0^12,-2^2)/4"}


def test_catalogue_and_file_loading(tmp_path):
    assert set(L.builtin_lattices()) >= {"F4", "E8", "LambdaQ8sq", "BarnesWall", "Z2"}
    f = tmp_path / "m.txt"
    f.write_text(linalg.format_matrix(L.F4))
    assert L.load_lattice(str(f)).rows == L.F4
    L.override_builtin("Z2", [[2, 0], [0, 1]])
    try:
        assert L.builtin_lattices()["Z2"].rows == linalg.mat([[2, 0], [0, 1]])
    finally:
        L.clear_overrides()
    assert L.builtin_lattices()["Z2"].rows == L.Z2
