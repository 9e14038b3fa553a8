from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import rationals
from griess_s3.exact import (
    ZETA3,
    Eisenstein,
    Matrix,
    NotDiagonalizableError,
    PoleError,
    Poly,
    RationalFn,
    format_rational,
    format_scalar,
    inverse,
    is_positive_definite,
    kernel,
    parse_rational,
    rank,
    rational_roots,
    solve_in_span,
    split_eigenspaces,
)
from griess_s3.exact.poly import poly_gcd

Q = Fraction

eisenstein = st.builds(Eisenstein, rationals(), rationals())
nonzero_eisenstein = eisenstein.filter(bool)


# -- rationals ---------------------------------------------------------------

@pytest.mark.parametrize("text, value", [("13/256", Q(13, 256)), ("-3/4", Q(-3, 4)), ("7", Q(7)), (" 2/3 ", Q(2, 3))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["", "1/0", "a/b", "1.5", "1/2/3"])
def test_parse_rational_rejects(text):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_rational(text)


def test_strict_parse_wants_lowest_terms():
    assert parse_rational("2/4") == Q(1, 2)
    with pytest.raises(ValueError):
        parse_rational("2/4", strict=True)


@given(rationals(10**6, 10**6))
def test_format_parse_roundtrip(x):
    text = format_rational(x)
    assert "/" in text
    assert parse_rational(text, strict=True) == x


def test_format_scalar_eisenstein():
    assert format_scalar(Q(5)) == "5/1"
    assert "zeta3" in format_scalar(ZETA3)


# -- Q(zeta3) -----------------------------------------------------------------

def test_zeta3_is_primitive_cube_root():
    assert ZETA3**3 == 1
    assert ZETA3 != 1
    assert 1 + ZETA3 + ZETA3**2 == 0
    assert ZETA3.conjugate() == ZETA3**2 == ZETA3.inverse()


@given(eisenstein, eisenstein, eisenstein)
def test_eisenstein_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z
    assert x - x == 0


@given(nonzero_eisenstein, eisenstein)
def test_eisenstein_division(x, y):
    assert x * x.inverse() == 1
    assert (y / x) * x == y


@given(eisenstein, eisenstein)
def test_conjugation_and_norm_are_multiplicative(x, y):
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert (x * y).norm() == x.norm() * y.norm()
    assert x * x.conjugate() == x.norm()


@given(rationals())
def test_rational_embedding(q):
    e = Eisenstein(q)
    assert e == q and hash(e) == hash(q)
    assert e + ZETA3 - ZETA3 == q


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        Eisenstein(0).inverse()


# -- polynomials -------------------------------------------------------------

@given(st.sets(rationals(30, 12), min_size=1, max_size=5), rationals(9, 5).filter(bool))
def test_rational_roots_recovers_roots(roots, lead):
    p = Poly.from_roots(roots, lead)
    assert rational_roots(p) == set(roots)


@given(st.lists(rationals(), max_size=6), st.lists(rationals(), min_size=1, max_size=4))
def test_divmod_identity(a, b):
    p, d = Poly(a), Poly(b)
    if d.is_zero:
        return
    q, r = p.divmod(d)
    assert q * d + r == p
    assert r.is_zero or r.degree < d.degree


def test_rational_roots_ignores_irrational_roots():
    # (x^2 - 2)(4x - 3)
    p = (Poly.x() ** 2 - 2) * Poly([-3, 4])
    assert rational_roots(p) == {Q(3, 4)}


def test_rational_roots_of_zero_polynomial_is_an_error():
    with pytest.raises(ValueError):
        rational_roots(Poly())


def test_gcd():
    p = Poly.from_roots([1, 2, Q(1, 3)])
    q = Poly.from_roots([2, Q(1, 3), 5])
    assert poly_gcd(p, q) == Poly.from_roots([2, Q(1, 3)])


@given(rationals(), rationals(), rationals().filter(lambda t: t not in (Q(1), Q(-2))))
def test_rational_function_arithmetic_matches_evaluation(a, b, t):
    x = RationalFn.x()
    f = (x - a) / (x - 1)
    g = (b * x + 1) / (x + 2)
    assert (f + g)(t) == f(t) + g(t)
    assert (f * g)(t) == f(t) * g(t)
    if g(t) != 0:
        assert (f / g)(t) == f(t) / g(t)


def test_rational_function_pole():
    f = 1 / (RationalFn.x() - Q(1, 64))
    with pytest.raises(PoleError):
        f(Q(1, 64))


def test_rational_function_is_reduced():
    x = RationalFn.x()
    assert (x**2 - 1) / (x - 1) == x + 1
    assert ((x - 3) * (x + Q(1, 2)) / (x + 5)).roots() == {Q(3), Q(-1, 2)}


# -- matrices ----------------------------------------------------------------

small_matrices = st.integers(1, 4).flatmap(
    lambda n: st.integers(1, 4).flatmap(
        lambda m: st.lists(st.lists(rationals(6, 3), min_size=m, max_size=m), min_size=n, max_size=n)
    )
)


@given(small_matrices)
def test_kernel_vectors_are_annihilated_and_rank_nullity_holds(rows):
    m = Matrix(rows)
    ker = kernel(m)
    for v in ker:
        assert all(x == 0 for x in m.apply(v))
    assert rank(m) + len(ker) == m.cols
    assert rank(m) == rank(m.transpose())


@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.lists(rationals(6, 3), min_size=n, max_size=n),
                                                     min_size=n, max_size=n)))
def test_inverse_and_determinant(rows):
    m = Matrix(rows)
    if m.det() == 0:
        with pytest.raises(ZeroDivisionError):
            inverse(m)
        return
    mi = inverse(m)
    assert m @ mi == Matrix.identity(m.rows) == mi @ m
    assert (m @ m).det() == m.det() ** 2


def test_hilbert_matrix_is_positive_definite():
    h = Matrix([[Q(1, i + j + 1) for j in range(5)] for i in range(5)])
    assert is_positive_definite(h)


@pytest.mark.parametrize("diag, expected", [([1, 2, 3], True), ([1, 0, 3], False), ([1, -1, 3], False)])
def test_positive_definite_on_diagonals(diag, expected):
    assert is_positive_definite(Matrix.diag(diag)) is expected


def test_positive_definite_rejects_nonsymmetric():
    with pytest.raises(ValueError):
        is_positive_definite(Matrix([[1, 1], [0, 1]]))


def test_split_eigenspaces():
    m = Matrix([[2, 0, 0], [0, 0, 0], [0, 0, Q(1, 2)]])
    spaces = split_eigenspaces(m, [2, 0, Q(1, 2), Q(1, 16)])
    assert [len(s) for s in spaces] == [1, 1, 1, 0]


def test_jordan_block_is_not_diagonalizable():
    with pytest.raises(NotDiagonalizableError) as info:
        split_eigenspaces(Matrix([[2, 1], [0, 2]]), [2, 0])
    assert info.value.defect == 1


def test_solve_in_span():
    basis = [(1, 0, 1), (0, 1, 1)]
    assert solve_in_span(basis, (2, 3, 5)) == [2, 3]
    assert solve_in_span(basis, (0, 0, 1)) is None


@settings(max_examples=30)
@given(st.lists(st.lists(eisenstein, min_size=3, max_size=3), min_size=2, max_size=3))
def test_kernel_over_eisenstein(rows):
    m = Matrix(rows)
    for v in kernel(m):
        assert all(x == 0 for x in m.apply(v))
    assert rank(m) + len(kernel(m)) == 3
