"""Finitely generated convex cones and the invariant-cone checks.

Every membership answer comes with an exact certificate: nonnegative
coefficients that recombine the point, or a linear functional that is
nonnegative on the generators and negative on the point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import (
    AmpdynError,
    ConeDegenerateError,
    DimensionMismatchError,
    NotInvariantError,
    SpectrumNotExpandingError,
)
from .lp import solve_lp
from .matrices import Matrix, char_poly, inverse, rank
from .nspullback import EndoAction
from .roots import circle_profile
from .scalars import as_fraction, format_rational

Vector = tuple[Fraction, ...]


def _vec(v: Sequence) -> Vector:
    return tuple(as_fraction(x) for x in v)


class PolyCone:
    """Cone of nonnegative combinations of finitely many nonzero rational vectors."""

    def __init__(self, ambient_dim: int, generators: Sequence[Sequence]):
        if ambient_dim <= 0:
            raise AmpdynError("ambient dimension must be positive")
        gens = [_vec(g) for g in generators]
        for g in gens:
            if len(g) != ambient_dim:
                raise DimensionMismatchError(f"generator of length {len(g)} in dimension {ambient_dim}")
            if not any(g):
                raise AmpdynError("generators must be nonzero")
        if not gens:
            raise AmpdynError("a cone needs at least one generator")
        self.ambient_dim = ambient_dim
        self.generators: tuple[Vector, ...] = tuple(gens)

    @classmethod
    def orthant(cls, n: int) -> "PolyCone":
        return cls(n, [[int(i == j) for j in range(n)] for i in range(n)])

    def __repr__(self):
        return f"PolyCone({self.ambient_dim}, {[list(map(str, g)) for g in self.generators]})"

    @cached_property
    def span_dim(self) -> int:
        return rank(Matrix(self.generators))

    @property
    def full_dimensional(self) -> bool:
        return self.span_dim == self.ambient_dim

    @cached_property
    def pointed(self) -> bool:
        """No line: the only nonnegative combination equal to 0 is trivial."""
        k = len(self.generators)
        rows = [[g[i] for g in self.generators] for i in range(self.ambient_dim)]
        rows.append([1] * k)
        res = solve_lp(rows, [0] * self.ambient_dim + [1])
        return res.status == "infeasible"

    def image(self, phi: Matrix) -> "PolyCone":
        return PolyCone(self.ambient_dim, [phi @ g for g in self.generators])

    def to_json(self) -> dict:
        return {"dim": self.ambient_dim,
                "generators": [[format_rational(x) for x in g] for g in self.generators]}

    @classmethod
    def from_json(cls, obj: dict) -> "PolyCone":
        try:
            return cls(int(obj["dim"]), obj["generators"])
        except (KeyError, TypeError, ValueError) as exc:
            raise AmpdynError(f"malformed cone JSON: {exc}") from exc


@dataclass(frozen=True)
class Membership:
    member: bool
    coefficients: Vector | None = None
    separator: Vector | None = None

    def __bool__(self):
        return self.member

    def to_json(self) -> dict:
        out: dict = {"member": self.member}
        if self.coefficients is not None:
            out["coefficients"] = [format_rational(x) for x in self.coefficients]
        if self.separator is not None:
            out["separator"] = [format_rational(x) for x in self.separator]
        return out


def _separator(C: PolyCone, v: Vector) -> Vector | None:
    """Sparse ``u`` with ``u.g >= 0`` on generators and ``u.v = -1``."""
    n, k = C.ambient_dim, len(C.generators)
    rows = []
    for idx, g in enumerate(C.generators):
        # u = up - um with slack s_g >= 0:  g.up - g.um - s_g = 0
        rows.append(list(g) + [-x for x in g] + [-int(j == idx) for j in range(k)])
    rows.append(list(v) + [-x for x in v] + [0] * k)
    res = solve_lp(rows, [0] * k + [-1], [1] * (2 * n) + [0] * k)
    if res.status != "optimal":
        return None
    return tuple(res.x[i] - res.x[n + i] for i in range(n))


def contains(C: PolyCone, v: Sequence, strict: bool = False) -> Membership:
    """Exact membership of ``v`` in ``C`` (``strict``: in the relative interior).

    The relative interior of a finitely generated cone is the set of
    combinations with every coefficient positive.
    """
    v = _vec(v)
    if len(v) != C.ambient_dim:
        raise DimensionMismatchError(f"point of length {len(v)} in dimension {C.ambient_dim}")
    n, k = C.ambient_dim, len(C.generators)
    G = [[g[i] for g in C.generators] for i in range(n)]
    if not strict:
        res = solve_lp(G, v)
        if res.status == "optimal":
            return Membership(True, res.x)
        return Membership(False, separator=_separator(C, v))
    # lambda = mu + t*1 with mu >= 0, 0 <= t <= 1; maximise t
    rowsum = [sum(r, Fraction(0)) for r in G]
    rows = [r + [rs, 0] for r, rs in zip(G, rowsum)]
    rows.append([0] * k + [1, 1])
    res = solve_lp(rows, list(v) + [1], [0] * k + [-1, 0])
    if res.status != "optimal":
        return Membership(False, separator=_separator(C, v))
    t = res.x[k]
    if t > 0:
        return Membership(True, tuple(mu + t for mu in res.x[:k]))
    return Membership(False)


def check_certificate(C: PolyCone, v: Sequence, m: Membership) -> bool:
    """Verify a membership certificate exactly."""
    v = _vec(v)
    if m.member:
        if m.coefficients is None or any(c < 0 for c in m.coefficients):
            return False
        comb = [sum((c * g[i] for c, g in zip(m.coefficients, C.generators)), Fraction(0))
                for i in range(C.ambient_dim)]
        return tuple(comb) == v
    if m.separator is None:
        return True
    u = m.separator
    return (all(sum(a * b for a, b in zip(u, g)) >= 0 for g in C.generators)
            and sum(a * b for a, b in zip(u, v)) < 0)


def _as_matrix(phi) -> Matrix:
    return phi.mat if isinstance(phi, EndoAction) else phi


def is_invariant(phi, C: PolyCone) -> bool:
    """Decide ``phi(C) == C`` exactly for a finitely generated cone."""
    mat = _as_matrix(phi)
    if mat.nrows != C.ambient_dim or mat.ncols != C.ambient_dim:
        raise DimensionMismatchError("matrix and cone dimensions differ")
    img = C.image(mat)
    return (all(contains(C, g) for g in img.generators)
            and all(contains(img, g) for g in C.generators))


@dataclass
class ConeWitnessReport:
    premise_ok: bool
    membership: bool | None = None
    certificate: dict = field(default_factory=dict)
    partial_sum_trace: list = field(default_factory=list)
    least_m: int | None = None
    spectral_ok: bool | None = None
    violation: bool = False
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "premise_ok": self.premise_ok,
            "membership": self.membership,
            "certificate": self.certificate,
            "partial_sum_trace": self.partial_sum_trace,
            "least_m": self.least_m,
            "spectral_ok": self.spectral_ok,
            "violation": self.violation,
            "notes": list(self.notes),
        }


def _expanding(mat: Matrix) -> bool:
    return circle_profile(char_poly(mat), 1).as_tuple() == (0, 0, mat.nrows)


def verify_pf_lemma(phi, C: PolyCone) -> ConeWitnessReport:
    """Search for ``l`` interior with ``phi(l) - l`` interior; if found, check expansion.

    With ``l = G(1 + a)`` and ``phi(l) - l = G(1 + b)`` for ``a, b >= 0``, the
    premise is one LP feasibility problem.  A feasible premise together with an
    eigenvalue of modulus at most 1 is reported as a violation.
    """
    mat = _as_matrix(phi)
    if mat.nrows != C.ambient_dim:
        raise DimensionMismatchError("matrix and cone dimensions differ")
    if not C.full_dimensional or not C.pointed:
        raise ConeDegenerateError("cone must be full-dimensional and pointed")
    if not is_invariant(mat, C):
        raise NotInvariantError("phi(C) != C")
    n, k = C.ambient_dim, len(C.generators)
    gens = C.generators
    shifted = [tuple(x - y for x, y in zip(mat @ g, g)) for g in gens]  # (phi - id) g
    rows, rhs = [], []
    for i in range(n):
        rows.append([s[i] for s in shifted] + [-g[i] for g in gens])
        rhs.append(sum((g[i] for g in gens), Fraction(0)) - sum((s[i] for s in shifted), Fraction(0)))
    res = solve_lp(rows, rhs)
    report = ConeWitnessReport(premise_ok=res.status == "optimal")
    if not report.premise_ok:
        report.notes.append("no interior l with phi(l) - l interior; no spectral claim")
        return report
    alpha = [1 + a for a in res.x[:k]]
    beta = [1 + b for b in res.x[k:]]
    ell = tuple(sum((a * g[i] for a, g in zip(alpha, gens)), Fraction(0)) for i in range(n))
    h = tuple(x - y for x, y in zip(mat @ ell, ell))
    report.certificate = {"ell": [format_rational(x) for x in ell], "h": [format_rational(x) for x in h],
                          "ell_coefficients": [format_rational(x) for x in alpha],
                          "h_coefficients": [format_rational(x) for x in beta]}
    prof = circle_profile(char_poly(mat), 1)
    report.certificate["unit_profile"] = prof.to_json()
    report.spectral_ok = prof.as_tuple() == (0, 0, n)
    report.violation = not report.spectral_ok
    if report.violation:
        report.notes.append("premise holds but some eigenvalue has modulus <= 1")
    return report


def orbit_cone_witness(phi, v: Sequence, m_max: int = 64, stop_at_first: bool = True) -> ConeWitnessReport:
    """Find the least ``m`` with ``v`` in the relative interior of
    ``cone{phi^-1 e, ..., phi^-m e}``, where ``e = phi(v) - v``.

    Each trace entry is ``(m, residual, in_relint)`` where ``residual`` is the
    max-norm of ``v - s_m = phi^-m v`` and ``s_m`` the partial sum of the
    generators.
    """
    mat = _as_matrix(phi)
    v = _vec(v)
    if len(v) != mat.nrows:
        raise DimensionMismatchError("vector and matrix dimensions differ")
    if not _expanding(mat):
        raise SpectrumNotExpandingError("phi has an eigenvalue of modulus <= 1")
    e = tuple(x - y for x, y in zip(mat @ v, v))
    report = ConeWitnessReport(premise_ok=True)
    report.certificate["e"] = [format_rational(x) for x in e]
    if not any(e):
        report.membership = not any(v)
        report.notes.append("e = 0 forces v = 0 since 1 is not an eigenvalue")
        return report
    inv = inverse(mat)
    gens: list[Vector] = []
    g = e
    residual = v
    for m in range(1, m_max + 1):
        g = inv @ g
        gens.append(g)
        residual = inv @ residual
        mem = contains(PolyCone(len(v), gens), v, strict=True)
        report.partial_sum_trace.append(
            (m, format_rational(max(abs(x) for x in residual)), mem.member))
        if mem.member and report.least_m is None:
            report.least_m = m
            report.membership = True
            report.certificate["coefficients"] = [format_rational(x) for x in mem.coefficients]
            if stop_at_first:
                break
    if report.least_m is None:
        report.membership = None
        report.notes.append(f"no witness up to m = {m_max}")
    return report
