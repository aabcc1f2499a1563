"""Spectral verdicts for pullback actions and the composition-power search."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DimensionMismatchError, HypothesisNotMetError, NotIntAmplifiedError
from .matrices import Matrix, char_poly, inf_norm, inverse
from .nspullback import CMEndo, EndoAction, endo_degree, h11_charpoly, ns_pullback
from .roots import CircleProfile, circle_profile, is_diagonalizable, same_modulus
from .scalars import format_rational

COMPOSITION_DIRECTION = "pullback composes as phi_g o phi_f^i"


@dataclass
class ClassificationReport:
    unit_profile: CircleProfile
    int_amplified: bool
    amplified_sufficient: str  # "Yes" or "NoEvidence"
    polarized_profile: str  # "Yes", "No" or "Unknown"
    polarized_q_sq: Fraction | None
    diagonalizable: bool
    degree: int | None
    char_poly: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "unit_profile": self.unit_profile.to_json(),
            "int_amplified": self.int_amplified,
            "amplified_sufficient": self.amplified_sufficient,
            "polarized_profile": self.polarized_profile,
            "polarized_q_sq": None if self.polarized_q_sq is None else format_rational(self.polarized_q_sq),
            "diagonalizable": self.diagonalizable,
            "degree": self.degree,
            "char_poly": list(self.char_poly),
            "notes": list(self.notes),
        }


def _as_action(phi) -> EndoAction:
    if isinstance(phi, EndoAction):
        return phi
    if isinstance(phi, CMEndo):
        return ns_pullback(phi)
    if isinstance(phi, Matrix):
        return EndoAction(phi)
    raise TypeError(f"cannot classify {type(phi).__name__}")


def classify(phi) -> ClassificationReport:
    """Classify an invertible action on N^1 (or N_{n-1}) by its spectrum.

    * int-amplified iff every eigenvalue has modulus > 1;
    * the sufficient condition for amplified is no eigenvalue of modulus 1;
    * the polarized profile needs diagonalizability and one common modulus
      ``q`` with ``q**2 > 1``.
    """
    action = _as_action(phi)
    mat = action.mat
    n = mat.nrows
    chi = char_poly(mat)
    prof = circle_profile(chi, 1)
    diag = is_diagonalizable(mat)
    notes: list[str] = []
    verdict = same_modulus(chi)
    if verdict.kind == "AllEqual" and verdict.q_sq > 1 and diag:
        polarized, q_sq = "Yes", verdict.q_sq
    elif verdict.kind == "Unknown":
        polarized, q_sq = "Unknown", None
        notes.append("equal-modulus test inconclusive")
    else:
        polarized, q_sq = "No", None
        if verdict.kind == "AllEqualIrrational":
            notes.append("all eigenvalues share an irrational squared modulus")
        elif verdict.kind == "AllEqual" and not diag:
            notes.append(f"equal moduli (q^2 = {format_rational(verdict.q_sq)}) but not diagonalizable")
        elif verdict.kind == "AllEqual":
            notes.append(f"equal moduli with q^2 = {format_rational(verdict.q_sq)} <= 1")
    if action.degree is None:
        notes.append("degree unknown for an abstract action")
    return ClassificationReport(
        unit_profile=prof,
        int_amplified=prof.as_tuple() == (0, 0, n),
        amplified_sufficient="Yes" if prof.on == 0 else "NoEvidence",
        polarized_profile=polarized,
        polarized_q_sq=q_sq,
        diagonalizable=diag,
        degree=action.degree,
        char_poly=chi.to_json(),
        notes=notes,
    )


@dataclass
class CompositionReport:
    i_norm_bound: int
    passing_below_bound: list[int]
    least_direct_pass: int | None
    uniform_bound: int
    norm_product: Fraction
    direction: str = COMPOSITION_DIRECTION

    def to_json(self) -> dict:
        return {
            "i_norm_bound": self.i_norm_bound,
            "passing_below_bound": list(self.passing_below_bound),
            "least_direct_pass": self.least_direct_pass,
            "uniform_bound": self.uniform_bound,
            "norm_product": format_rational(self.norm_product),
            "direction": self.direction,
        }


def compose_min_power(phi_f, phi_g, max_power: int = 10_000) -> CompositionReport:
    """Norm certificate that ``f^i o g`` is int-amplified.

    ``i_norm_bound`` is the least ``i >= 1`` with
    ``|phi_f^-i| * |phi_g^-1| < 1`` in the max-row-sum norm; at any such ``i``
    every eigenvalue ``mu`` of ``phi_g phi_f^i`` satisfies ``|mu| > 1``.
    ``uniform_bound`` is an ``i_u`` for which submultiplicativity certifies the
    inequality for every ``i >= i_u``.  ``passing_below_bound`` lists the
    ``i`` in ``[0, i_norm_bound)`` where the direct spectral test passes.
    """
    f = _as_action(phi_f)
    g = _as_action(phi_g)
    if f.dim != g.dim:
        raise DimensionMismatchError("actions live on spaces of different dimension")
    if not classify(f).int_amplified:
        raise NotIntAmplifiedError("phi_f has an eigenvalue of modulus <= 1")
    f_inv = inverse(f.mat)
    g_inv_norm = inf_norm(inverse(g.mat))
    powers = [Matrix.identity(f.dim)]
    norms = [Fraction(1)]
    i_bound = None
    for i in range(1, max_power + 1):
        powers.append(powers[-1] @ f_inv)
        norms.append(inf_norm(powers[-1]))
        if i_bound is None and norms[i] * g_inv_norm < 1:
            i_bound = i
        if i_bound is not None and norms[i] < 1:
            break
    else:
        raise AssertionError("norm bound not reached; spectral radius of phi_f^-1 must be < 1")
    uniform = _uniform_bound(f_inv, norms, g_inv_norm)
    passing = []
    for i in range(i_bound):
        comp = g.mat @ (f.mat ** i)
        if classify(EndoAction(comp)).int_amplified:
            passing.append(i)
    least = passing[0] if passing else i_bound
    return CompositionReport(i_bound, passing, least, uniform, norms[i_bound] * g_inv_norm)


def _uniform_bound(f_inv: Matrix, norms: list[Fraction], g_inv_norm: Fraction) -> int:
    """Least ``i_u`` such that ``|phi_f^-i| |phi_g^-1| < 1`` is certified for all ``i >= i_u``.

    With ``k`` such that ``c = |phi_f^-k| < 1`` and ``B = max_{j<k} |phi_f^-j|``,
    ``|phi_f^-(qk + j)| <= c**q * B``; below that tail the exact norms are used.
    """
    k = next(i for i in range(1, len(norms)) if norms[i] < 1)
    c = norms[k]
    B = max(norms[:k])
    q = 0
    while c ** q * B * g_inv_norm >= 1:
        q += 1
    start = max(q * k, 1)
    power = f_inv ** (len(norms) - 1)
    while len(norms) <= start:
        power = power @ f_inv
        norms.append(inf_norm(power))
    i_u = start
    while i_u > 1 and norms[i_u - 1] * g_inv_norm < 1:
        i_u -= 1
    return i_u


@dataclass
class DegreeBoundReport:
    degree: int
    profile: CircleProfile
    below_degree: bool
    degree_exceeds_one: bool

    @property
    def ok(self) -> bool:
        return self.below_degree and self.degree_exceeds_one

    def to_json(self) -> dict:
        return {"degree": self.degree, "profile": self.profile.to_json(),
                "below_degree": self.below_degree, "degree_exceeds_one": self.degree_exceeds_one,
                "ok": self.ok}


def verify_spectrum_below_degree(e: CMEndo) -> DegreeBoundReport:
    """Check ``|lambda| < deg f`` on N^1 and ``deg f > 1`` for int-amplified ``f``.

    Compares ``|lambda|**2`` with ``deg**2`` so everything stays rational.
    """
    if not classify(ns_pullback(e)).int_amplified:
        raise HypothesisNotMetError("endomorphism is not int-amplified")
    deg = endo_degree(e)
    chi = h11_charpoly(e)
    prof = circle_profile(chi, Fraction(deg * deg))
    return DegreeBoundReport(deg, prof, prof.inside == chi.degree, deg > 1)
