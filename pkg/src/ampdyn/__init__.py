"""Exact spectral and convex-cone tests for endomorphisms acting on N^1.

Everything runs in rational or imaginary-quadratic arithmetic; floating point
only appears in :func:`root_balls`, whose enclosures are validated exactly.
"""

from .classify import (
    ClassificationReport,
    CompositionReport,
    DegreeBoundReport,
    classify,
    compose_min_power,
    verify_spectrum_below_degree,
)
from .cones import (
    ConeWitnessReport,
    Membership,
    PolyCone,
    check_certificate,
    contains,
    is_invariant,
    orbit_cone_witness,
    verify_pf_lemma,
)
from .errors import *  # noqa: F401,F403
from .lp import LPResult, solve_lp
from .matrices import Matrix, RatMatrix, char_poly, det, inf_norm, inverse, kron, min_poly, quad_matrix, rank
from .nspullback import CMEndo, EndoAction, endo_degree, h11_charpoly, hermitian_basis, ns_pullback
from .poly import RatPoly, gcd, lcm, squarefree_decomposition
from .roots import (
    CircleProfile,
    ModulusVerdict,
    RootBall,
    circle_profile,
    is_diagonalizable,
    root_balls,
    same_modulus,
)
from .scalars import ComplexBall, QuadElem, conj, embed, norm

__version__ = "0.1.0"
