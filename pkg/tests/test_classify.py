from fractions import Fraction

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from ampdyn import (
    CMEndo,
    DimensionMismatchError,
    EndoAction,
    HypothesisNotMetError,
    Matrix,
    NotIntAmplifiedError,
    classify,
    compose_min_power,
    det,
    inf_norm,
    inverse,
    ns_pullback,
    same_modulus,
    char_poly,
    verify_spectrum_below_degree,
)
from ampdyn.corpus import POLARIZED_PAIR_NORM_BOUND, POLARIZED_PAIR_PASSING, polarized_pair, shear_times

from conftest import rat_matrices


def as_float(m: Matrix) -> np.ndarray:
    return np.array([[float(x) for x in r] for r in m.rows])


def test_shear_endomorphism():
    rep = classify(ns_pullback(shear_times(2)))
    assert rep.int_amplified and not rep.diagonalizable
    assert rep.polarized_profile == "No"
    assert rep.degree == 16


def test_polarized_factors_and_their_composition():
    f, g = polarized_pair()
    for e in (f, g):
        rep = classify(e)
        assert (rep.int_amplified, rep.polarized_profile, rep.polarized_q_sq, rep.diagonalizable) == \
            (True, "Yes", 36, True)
    rep = classify(f @ g)
    assert not rep.int_amplified and rep.amplified_sufficient == "Yes"
    assert rep.unit_profile.as_tuple() == (1, 0, 3)


def test_report_json_keys_are_stable():
    obj = classify(Matrix.diag([2, 3])).to_json()
    assert sorted(obj) == ["amplified_sufficient", "char_poly", "degree", "diagonalizable", "int_amplified",
                           "notes", "polarized_profile", "polarized_q_sq", "unit_profile"]
    assert obj["degree"] is None and obj["notes"]


def test_rotation_has_no_amplified_evidence():
    rep = classify(Matrix([[0, -1], [1, 0]]))
    assert rep.amplified_sufficient == "NoEvidence" and not rep.int_amplified
    assert rep.polarized_profile == "No"


@given(rat_matrices(max_n=4, elements=st.integers(-3, 3)))
def test_report_invariants(rows):
    m = Matrix(rows)
    assume(det(m) != 0)
    rep = classify(m)
    n = m.nrows
    assert rep.int_amplified == (rep.unit_profile.as_tuple() == (0, 0, n))
    assert (rep.amplified_sufficient == "Yes") == (rep.unit_profile.on == 0)
    if rep.polarized_profile == "Yes":
        assert rep.diagonalizable and rep.polarized_q_sq > 1
        assert same_modulus(char_poly(m)).q_sq == rep.polarized_q_sq
    moduli = np.abs(np.linalg.eigvals(as_float(m)))
    if np.all(np.abs(moduli - 1) > 1e-6):
        assert rep.int_amplified == bool(np.all(moduli > 1))


@given(rat_matrices(max_n=4, elements=st.integers(-3, 3)), st.integers(1, 3))
def test_power_compatibility(rows, k):
    m = Matrix(rows)
    assume(det(m) != 0)
    assert classify(m ** k).int_amplified == classify(m).int_amplified


def test_compose_diagonal_examples():
    rep = compose_min_power(Matrix.diag([3, 3]), Matrix.diag([5, Fraction(1, 5)]))
    assert (rep.i_norm_bound, rep.passing_below_bound) == (2, [])
    assert rep.direction == "pullback composes as phi_g o phi_f^i"
    rep = compose_min_power(Matrix.diag([2, 2]), Matrix.diag([2, 2]))
    assert (rep.i_norm_bound, rep.passing_below_bound, rep.least_direct_pass) == (1, [0], 0)


def test_compose_preconditions():
    with pytest.raises(NotIntAmplifiedError):
        compose_min_power(Matrix.diag([2, Fraction(1, 2)]), Matrix.diag([2, 2]))
    with pytest.raises(DimensionMismatchError):
        compose_min_power(Matrix.diag([2, 2]), Matrix.diag([2, 2, 2]))


def test_polarized_pair_composition_against_numpy_scan():
    f, g = (ns_pullback(e) for e in polarized_pair())
    rep = compose_min_power(f, g)
    assert rep.i_norm_bound == POLARIZED_PAIR_NORM_BOUND
    assert tuple(rep.passing_below_bound) == POLARIZED_PAIR_PASSING
    F, G = as_float(f.mat), as_float(g.mat)
    scan = [i for i in range(13)
            if np.all(np.abs(np.linalg.eigvals(G @ np.linalg.matrix_power(F, i))) > 1 + 1e-9)]
    assert scan[:3] == [0, 3, 4] and all(i in scan for i in range(3, 13))
    # i = 1 is the composition f o g itself
    assert not classify(EndoAction(g.mat @ f.mat)).int_amplified


@given(st.lists(st.integers(2, 5), min_size=2, max_size=3), st.lists(st.integers(-3, 3), min_size=9, max_size=9))
def test_composition_certificate_soundness(diag, g_entries):
    n = len(diag)
    f = Matrix.diag(diag)
    g = Matrix([g_entries[i * 3:i * 3 + n] for i in range(n)])
    assume(det(g) != 0)
    rep = compose_min_power(f, g)
    g_inv = inf_norm(inverse(g))
    for i in range(rep.i_norm_bound, rep.i_norm_bound + 4):
        assert classify(g @ f ** i).int_amplified
    for i in range(rep.uniform_bound, rep.uniform_bound + 10):
        assert inf_norm(inverse(f) ** i) * g_inv < 1
    for i in range(rep.i_norm_bound):
        assert (i in rep.passing_below_bound) == classify(g @ f ** i).int_amplified


def test_norm_inequality_can_fail_after_its_first_pass():
    # phi_f^2 = 3*I, so |phi_f^-i| oscillates: the single-i certificate does not cover every later i
    f = Matrix([[-3, -3], [2, 3]])
    g = Matrix.diag([Fraction(1, 2), 3])
    rep = compose_min_power(f, g)
    products = [inf_norm(inverse(f) ** i) * inf_norm(inverse(g)) for i in range(12)]
    assert (rep.i_norm_bound, rep.uniform_bound) == (2, 4)
    assert products[2] < 1 <= products[3]
    assert all(x < 1 for x in products[4:])
    # the spectral conclusion itself still holds at i = 3
    assert classify(g @ f ** 3).int_amplified


@pytest.mark.parametrize("rows, deg", [
    ([[2, 0], [0, 2]], 16),
    ([[1, -5], [1, 1]], 36),
    ([[2, 0], [2, 2]], 16),
    ([[11, -105], [1, -9]], 36),
])
def test_spectrum_below_degree_examples(rows, deg):
    rep = verify_spectrum_below_degree(CMEndo.from_rows(rows))
    assert rep.ok and rep.degree == deg
    assert rep.profile.radius_sq == deg * deg


def test_spectrum_below_degree_requires_int_amplified():
    with pytest.raises(HypothesisNotMetError):
        verify_spectrum_below_degree(CMEndo.from_rows([[6, -60], [12, -114]]))
