from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from ampdyn import (
    AmpdynError,
    CMEndo,
    EndoAction,
    Matrix,
    NonIntegralDegreeError,
    NonMaximalOrderError,
    QuadElem,
    RatPoly,
    RingMismatchError,
    SingularEndoError,
    char_poly,
    det,
    endo_degree,
    h11_charpoly,
    ns_pullback,
)
from ampdyn.nspullback import hermitian_basis

from conftest import quad_elems


def to_complex(x: QuadElem) -> complex:
    w = 1j * np.sqrt(-x.d) if x.d % 4 in (2, 3) else (1 + 1j * np.sqrt(-x.d)) / 2
    return float(x.a) + float(x.b) * w


@st.composite
def cm_endos(draw, d=-1, max_n=3, cm=True, n=None):
    n = draw(st.integers(1, max_n)) if n is None else n
    if cm:
        rows = [[draw(quad_elems(d=d, integral=True)) for _ in range(n)] for _ in range(n)]
    else:
        rows = [[draw(st.integers(-4, 4)) for _ in range(n)] for _ in range(n)]
    assume(det(Matrix(rows)) != 0)
    return CMEndo.from_rows(rows, d, cm)


def test_multiplication_by_n_acts_by_n_squared():
    for n, d in ((2, -1), (3, -3), (5, -7)):
        phi = ns_pullback(CMEndo.from_rows([[n, 0], [0, n]], d))
        assert phi.mat == Matrix.diag([n * n] * 4)
        assert phi.degree == n ** 4
    assert ns_pullback(CMEndo.from_rows([[1, 0], [0, 1]])).mat == Matrix.identity(4)


def test_polarized_factor_spectrum():
    e = CMEndo.from_rows([[1, -5], [1, 1]])
    expected = RatPoly.from_roots([6, 6]) * RatPoly([36, 8, 1])
    assert char_poly(ns_pullback(e).mat) == expected
    assert h11_charpoly(e) == expected
    assert endo_degree(e) == 36


def test_real_composition_spectrum():
    e = CMEndo.from_rows([[6, -60], [12, -114]])
    mu = np.roots([1, 108, 36])
    want = np.sort([mu[0] ** 2, mu[0] * mu[1], mu[0] * mu[1], mu[1] ** 2])
    got = np.sort(np.roots([float(c) for c in reversed(h11_charpoly(e).coeffs)]).real)
    assert np.allclose(got, want, rtol=1e-6)
    assert h11_charpoly(e) == char_poly(ns_pullback(e).mat)


def test_degree_examples():
    assert endo_degree(CMEndo.from_rows([[2, 0], [0, 2]])) == 16
    assert endo_degree(CMEndo(Matrix([[QuadElem.omega(-1)]]), -1)) == 1
    assert endo_degree(CMEndo.from_rows([[2, 0], [2, 2]])) == 16


def test_basis_and_sizes():
    assert len(hermitian_basis(3, -1)) == 9
    assert len(hermitian_basis(3, -1, cm=False)) == 6
    phi = ns_pullback(CMEndo.from_rows([[2, 1], [1, 1]], -1, cm=False))
    assert phi.dim == 3
    assert "symmetric" in phi.provenance


def test_input_validation():
    with pytest.raises(SingularEndoError):
        CMEndo.from_rows([[1, 2], [2, 4]])
    with pytest.raises(NonMaximalOrderError):
        CMEndo.from_json({"d": -1, "conductor": 2, "matrix": [[{"a": "1", "b": "0"}]]})
    with pytest.raises(AmpdynError):
        CMEndo(Matrix([[QuadElem(1, 1, -1)]]), -1, cm=False)
    with pytest.raises(RingMismatchError):
        CMEndo.from_rows([[1]], -1) @ CMEndo.from_rows([[1]], -3)
    with pytest.raises(NonIntegralDegreeError):
        endo_degree(CMEndo.from_rows([[Fraction(1, 2), 0], [0, 1]]))
    with pytest.raises(AmpdynError):
        CMEndo.from_json({"d": 3, "matrix": [[{"a": "1", "b": "0"}]]})


def test_json_round_trips():
    e = CMEndo.from_rows([[1, -5], [1, 1]])
    obj = e.to_json()
    assert obj == {"d": -1, "cm": True, "matrix": [[{"a": "1", "b": "0"}, {"a": "-5", "b": "0"}],
                                                    [{"a": "1", "b": "0"}, {"a": "1", "b": "0"}]]}
    assert CMEndo.from_json(obj) == e
    phi = ns_pullback(e)
    back = EndoAction.from_json(phi.to_json())
    assert back == phi and back.degree == 36


@given(cm_endos())
def test_pullback_charpoly_matches_product_spectrum(e):
    assert char_poly(ns_pullback(e).mat) == h11_charpoly(e)


@given(cm_endos(d=-3, max_n=2))
def test_pullback_charpoly_matches_product_spectrum_eisenstein(e):
    assert char_poly(ns_pullback(e).mat) == h11_charpoly(e)


@given(cm_endos(cm=False))
def test_symmetric_model_matches_product_spectrum(e):
    assert char_poly(ns_pullback(e).mat) == h11_charpoly(e)


@given(cm_endos(max_n=2))
def test_pullback_eigenvalues_against_numpy(e):
    m = np.array([[to_complex(x) for x in r] for r in e.matrix.rows])
    lam = np.linalg.eigvals(m)
    want = np.array([a * np.conj(b) for a in lam for b in lam])
    got = np.linalg.eigvals(np.array([[float(x) for x in r] for r in ns_pullback(e).mat.rows], dtype=float))
    # compare via symmetric functions, robust to ordering
    assert np.allclose(np.poly(got), np.poly(want), rtol=1e-6, atol=1e-6)


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(cm_endos(n=n), cm_endos(n=n))))
def test_contravariance_and_degree(pair):
    a, b = pair
    ab = a @ b
    assert ns_pullback(ab).mat == ns_pullback(b).mat @ ns_pullback(a).mat
    assert endo_degree(ab) == endo_degree(a) * endo_degree(b)


@given(cm_endos())
def test_pullback_determinant_is_degree_power(e):
    assert abs(det(ns_pullback(e).mat)) == endo_degree(e) ** e.n
