from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from ampdyn import (
    Matrix,
    NonSquareError,
    RatPoly,
    SingularMatrixError,
    char_poly,
    det,
    inf_norm,
    inverse,
    kron,
    min_poly,
    quad_matrix,
)
from ampdyn import QuadElem
from ampdyn.matrices import poly_at_matrix

from conftest import rat_matrices, small_ints

X = sympy.Symbol("x")


def to_sympy_poly(p: RatPoly):
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)], X)


def from_sympy_poly(p) -> RatPoly:
    return RatPoly([Fraction(str(c)) for c in reversed(sympy.Poly(p, X).all_coeffs())])


def sympy_charpoly(rows) -> RatPoly:
    coeffs = sympy.Matrix(rows).charpoly(X).all_coeffs()
    return RatPoly([Fraction(str(c)) for c in reversed(coeffs)])


@pytest.mark.parametrize("rows, expected", [
    ([[1, 1], [0, 1]], RatPoly([1, -2, 1])),
    ([[6, -60], [12, -114]], RatPoly([36, 108, 1])),
    ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], RatPoly([-1, 1]) ** 3),
])
def test_char_poly_examples(rows, expected):
    assert char_poly(Matrix(rows)) == expected


@pytest.mark.parametrize("m, expected", [
    (Matrix([[1, 1], [0, 1]]), RatPoly([-1, 1]) ** 2),
    (Matrix.diag([2, 2, 3]), RatPoly.from_roots([2, 3])),
    (Matrix.identity(4), RatPoly([-1, 1])),
])
def test_min_poly_examples(m, expected):
    assert min_poly(m) == expected


def test_inverse_examples():
    assert inverse(Matrix.diag([2, 2])) == Matrix.diag([Fraction(1, 2)] * 2)
    assert inverse(Matrix([[1, 1], [0, 1]])) == Matrix([[1, -1], [0, 1]])
    assert inverse(Matrix([[6, -60], [12, -114]])) == Matrix([[-114, 60], [-12, 6]]).scale(Fraction(1, 36))
    with pytest.raises(SingularMatrixError):
        inverse(Matrix([[1, 2], [2, 4]]))
    with pytest.raises(NonSquareError):
        char_poly(Matrix([[1, 2, 3]]))


def test_inf_norm_and_kron_examples():
    assert inf_norm(Matrix([[1, -5], [1, 1]])) == 6
    assert inf_norm(Matrix.zeros(3)) == 0
    assert inf_norm(Matrix([[6, -60], [12, -114]])) == 126
    assert kron(Matrix.identity(2), Matrix.identity(2)) == Matrix.identity(4)
    assert kron(Matrix.diag([2, 3]), Matrix.diag([5, 7])) == Matrix.diag([10, 14, 15, 21])
    swap = kron(Matrix([[0, 1], [1, 0]]), Matrix.identity(2))
    assert swap == Matrix([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])


def test_json_encoding():
    m = Matrix([[1, -5], [1, 1]])
    assert m.to_json() == {"rows": 2, "cols": 2, "entries": ["1", "-5", "1", "1"]}
    assert Matrix.from_json(m.to_json()) == m


def test_quad_matrix_char_poly():
    # eigenvalues i and -i
    w = QuadElem.omega(-1)
    m = quad_matrix([[w, 0], [1, -w]], -1)
    assert char_poly(m) == RatPoly([1, 0, 1])


@given(rat_matrices(max_n=6))
def test_cayley_hamilton_and_det(rows):
    m = Matrix(rows)
    p = char_poly(m)
    assert p == sympy_charpoly(rows)
    assert poly_at_matrix(p, m) == Matrix.zeros(m.nrows)
    assert det(m) == (-1) ** m.nrows * p[0]


@given(rat_matrices(max_n=5, elements=st.integers(-2, 2)))
def test_min_poly_divides_char_poly(rows):
    m = Matrix(rows)
    mp, cp = min_poly(m), char_poly(m)
    assert mp.lc == 1 and cp.lc == 1
    assert not (cp % mp)
    assert poly_at_matrix(mp, m) == Matrix.zeros(m.nrows)
    # minimality: dropping any irreducible factor (sympy factorization) breaks annihilation
    for fac, _ in sympy.factor_list(to_sympy_poly(mp))[1]:
        reduced = from_sympy_poly(sympy.quo(to_sympy_poly(mp), fac))
        assert poly_at_matrix(reduced, m) != Matrix.zeros(m.nrows)


@given(rat_matrices(n=3), rat_matrices(n=3))
def test_inf_norm_submultiplicative(a, b):
    A, B = Matrix(a), Matrix(b)
    assert inf_norm(A @ B) <= inf_norm(A) * inf_norm(B)
    assert inf_norm(A) == Fraction(int(np.abs(np.array(a)).sum(axis=1).max()))


@given(st.lists(small_ints, min_size=2, max_size=2), st.lists(small_ints, min_size=2, max_size=2),
       rat_matrices(n=2), rat_matrices(n=2))
def test_kron_eigenvalues(da, db, sa, sb):
    Sa, Sb = Matrix(sa), Matrix(sb)
    if not det(Sa) or not det(Sb):
        return
    A = Sa @ Matrix.diag(da) @ inverse(Sa)
    B = Sb @ Matrix.diag(db) @ inverse(Sb)
    assert char_poly(kron(A, B)) == RatPoly.from_roots([x * y for x in da for y in db])


@given(rat_matrices(max_n=4))
def test_inverse_round_trip(rows):
    m = Matrix(rows)
    if det(m):
        assert m @ inverse(m) == Matrix.identity(m.nrows)
    else:
        with pytest.raises(SingularMatrixError):
            inverse(m)
