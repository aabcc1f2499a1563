"""Bundled worked cases with their expected verdicts.

Each case builds its endomorphisms from scratch and evaluates a list of named
assertions, so the same table drives the ``examples`` command and the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .classify import classify, compose_min_power
from .matrices import Matrix, min_poly
from .nspullback import CMEndo, h11_charpoly, ns_pullback
from .poly import RatPoly
from .roots import circle_profile

# Frozen from an exact brute-force scan of phi_g phi_f^i, i = 0..12.
POLARIZED_PAIR_NORM_BOUND = 5
POLARIZED_PAIR_PASSING = (0, 3, 4)


def multiplication_by(n: int, d: int = -1) -> CMEndo:
    return CMEndo.from_rows([[n, 0], [0, n]], d)


def shear_times(n: int, d: int = -1) -> CMEndo:
    """``n * [[1, 0], [1, 1]]``: int-amplified for ``n > 1`` yet not diagonalizable."""
    return CMEndo.from_rows([[n, 0], [n, n]], d)


def fibonacci_cube(d: int = -1) -> CMEndo:
    return CMEndo.from_rows((Matrix([[2, 1], [1, 1]]) ** 3).rows, d)


def fibonacci_cube_doubled(d: int = -1) -> CMEndo:
    """Doubling composed with the cube of ``[[2, 1], [1, 1]]``."""
    return multiplication_by(2, d) @ fibonacci_cube(d)


def polarized_pair(d: int = -1) -> tuple[CMEndo, CMEndo]:
    return (CMEndo.from_rows([[1, -5], [1, 1]], d),
            CMEndo.from_rows([[11, -105], [1, -9]], d))


@dataclass(frozen=True)
class Check:
    name: str
    run: Callable[[], bool]


def _case_shear() -> list[Check]:
    e = shear_times(2)
    phi = ns_pullback(e)

    def charpoly_is_fourth_power():
        return classify(phi).char_poly == RatPoly.from_roots([4] * 4).to_json()

    return [
        Check("int_amplified", lambda: classify(phi).int_amplified),
        Check("not_diagonalizable", lambda: not classify(phi).diagonalizable),
        Check("char_poly_(x-4)^4", charpoly_is_fourth_power),
        Check("min_poly_not_squarefree", lambda: not min_poly(phi.mat).is_squarefree()),
        Check("polarized_profile_no", lambda: classify(phi).polarized_profile == "No"),
    ]


def _case_fibonacci() -> list[Check]:
    report = classify(fibonacci_cube_doubled())
    base = classify(fibonacci_cube())
    return [
        Check("amplified_sufficient", lambda: report.amplified_sufficient == "Yes"),
        Check("not_int_amplified", lambda: not report.int_amplified),
        Check("spectral_radius_above_4", lambda: circle_profile(RatPoly(base.char_poly), 16).outside >= 1),
    ]


def _case_polarized_pair() -> list[Check]:
    f, g = polarized_pair()
    h = f @ g
    rf, rg = classify(f), classify(g)
    rh = classify(h)

    def composition_matrix():
        return h.matrix == CMEndo.from_rows([[6, -60], [12, -114]]).matrix

    def h11_has_small_eigenvalue():
        return circle_profile(h11_charpoly(h), 1).inside >= 1

    def norm_certificate():
        rep = compose_min_power(ns_pullback(f), ns_pullback(g))
        return (rep.i_norm_bound, tuple(rep.passing_below_bound)) == (
            POLARIZED_PAIR_NORM_BOUND, POLARIZED_PAIR_PASSING)

    return [
        Check("f_polarized_36", lambda: (rf.polarized_profile, rf.polarized_q_sq) == ("Yes", 36)),
        Check("g_polarized_36", lambda: (rg.polarized_profile, rg.polarized_q_sq) == ("Yes", 36)),
        Check("composition_matrix", composition_matrix),
        Check("composition_not_int_amplified", lambda: not rh.int_amplified),
        Check("composition_amplified_sufficient", lambda: rh.amplified_sufficient == "Yes"),
        Check("h11_eigenvalue_inside_unit_disc", h11_has_small_eigenvalue),
        Check("norm_certificate_regression", norm_certificate),
    ]


CASES: dict[str, Callable[[], list[Check]]] = {
    "9.1": _case_shear,
    "9.2": _case_fibonacci,
    "9.4": _case_polarized_pair,
}


def run_cases(case: str | None = None) -> list[tuple[str, str, bool]]:
    """Evaluate bundled checks in case order; ``KeyError`` for an unknown id."""
    ids = list(CASES) if case is None else [case]
    out = []
    for cid in ids:
        for check in CASES[cid]():
            out.append((cid, check.name, bool(check.run())))
    return out
