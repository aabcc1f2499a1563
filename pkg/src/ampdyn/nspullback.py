"""Pullback actions on N^1 of a self-product of an elliptic curve.

An endomorphism of ``E^n`` is given by an ``n x n`` matrix ``M`` over
``End(E)``.  Classes in ``N^1(E^n)`` are Hermitian forms over the CM order (or
symmetric integer forms when ``End(E) = Z``), and pullback acts by
``H -> M^* H M``.  Coordinates use the basis

    E_kk  (k = 0..n-1),  then for each k < l:  E_kl + E_lk,  w E_kl + conj(w) E_lk

with the second off-diagonal element dropped in the non-CM model.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    AmpdynError,
    NonIntegralDegreeError,
    NonMaximalOrderError,
    NonSquareError,
    RingMismatchError,
    SingularEndoError,
    SingularMatrixError,
)
from .matrices import Matrix, char_poly_coeffs, det, quad_matrix
from .poly import RatPoly, resultant, square_root
from .roots import squared_roots_poly
from .scalars import QuadElem, check_ring_tag, conj, norm


@dataclass(frozen=True)
class CMEndo:
    """Endomorphism of ``E^n`` given by a square matrix over ``End(E)``."""

    matrix: Matrix
    d: int
    cm: bool = True
    conductor: int = 1

    def __post_init__(self):
        check_ring_tag(self.d)
        if self.conductor != 1:
            raise NonMaximalOrderError(
                f"conductor {self.conductor}: only the maximal order is supported")
        if not self.matrix.is_square():
            raise NonSquareError("endomorphism matrix must be square")
        m = self.matrix
        if not all(isinstance(x, QuadElem) for x in m.entries()):
            m = quad_matrix(m.rows, self.d)
            object.__setattr__(self, "matrix", m)
        if any(x.d != self.d for x in m.entries()):
            raise RingMismatchError("matrix entries do not share the ring tag")
        if not self.cm and not m.is_rational():
            raise AmpdynError("non-CM endomorphisms need rational integer entries")
        if not det(m):
            raise SingularEndoError("endomorphism matrix is singular")

    @classmethod
    def from_rows(cls, rows, d: int = -1, cm: bool = True) -> "CMEndo":
        return cls(quad_matrix(rows, d), d, cm)

    @property
    def n(self) -> int:
        return self.matrix.nrows

    def __matmul__(self, other: "CMEndo") -> "CMEndo":
        """Matrix product; corresponds to the composition ``self o other``."""
        if other.d != self.d:
            raise RingMismatchError("ring tags differ")
        return CMEndo(self.matrix @ other.matrix, self.d, self.cm and other.cm)

    def to_json(self) -> dict:
        return {"d": self.d, "cm": self.cm,
                "matrix": [[x.to_json(with_ring=False) for x in r] for r in self.matrix.rows]}

    @classmethod
    def from_json(cls, obj: dict) -> "CMEndo":
        try:
            d = obj["d"]
            rows = obj["matrix"]
            cm = obj.get("cm", True)
            conductor = obj.get("conductor", 1)
        except (KeyError, TypeError) as exc:
            raise AmpdynError(f"malformed CMEndo JSON: {exc}") from exc
        if not isinstance(cm, bool):
            raise AmpdynError("'cm' must be a boolean")
        check_ring_tag(d)
        if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
            raise AmpdynError("'matrix' must be a nonempty list of rows")
        m = Matrix([[QuadElem.from_json(x, d) for x in r] for r in rows])
        return cls(m, d, cm, conductor)


@dataclass(frozen=True)
class EndoAction:
    """Invertible rational matrix of a pullback action, with its origin."""

    mat: Matrix
    provenance: str = ""
    degree: int | None = None
    notes: tuple = field(default=(), compare=False)

    def __post_init__(self):
        if not self.mat.is_square():
            raise NonSquareError("pullback action must be square")
        if not self.mat.is_rational():
            raise AmpdynError("pullback action must be rational")
        if not det(self.mat):
            raise SingularMatrixError("pullback action is singular")

    @property
    def dim(self) -> int:
        return self.mat.nrows

    def to_json(self) -> dict:
        out = self.mat.to_json()
        out["provenance"] = self.provenance
        out["degree"] = self.degree
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "EndoAction":
        mat = Matrix.from_json(obj)
        degree = obj.get("degree")
        if degree is not None and (not isinstance(degree, int) or isinstance(degree, bool) or degree <= 0):
            raise AmpdynError("'degree' must be a positive integer or null")
        return cls(mat, str(obj.get("provenance", "")), degree)


def hermitian_basis(n: int, d: int, cm: bool = True) -> list[Matrix]:
    zero = QuadElem(0, 0, d)
    one = QuadElem(1, 0, d)
    w = QuadElem.omega(d)
    out = []

    def unit(entries):
        rows = [[zero] * n for _ in range(n)]
        for (i, j), v in entries.items():
            rows[i][j] = v
        return Matrix(rows)

    for k in range(n):
        out.append(unit({(k, k): one}))
    for k in range(n):
        for l in range(k + 1, n):
            out.append(unit({(k, l): one, (l, k): one}))
            if cm:
                out.append(unit({(k, l): w, (l, k): conj(w)}))
    return out


def hermitian_coordinates(h: Matrix, cm: bool = True) -> list[Fraction]:
    n = h.nrows
    coords = []
    for k in range(n):
        x = h[k, k]
        if not x.is_rational():
            raise AmpdynError("diagonal of a Hermitian form must be rational")
        coords.append(x.a)
    for k in range(n):
        for l in range(k + 1, n):
            x = h[k, l]
            if cm:
                coords.extend([x.a, x.b])
            else:
                if not x.is_rational():
                    raise AmpdynError("symmetric model needs rational entries")
                coords.append(x.a)
    return coords


def ns_pullback(e: CMEndo) -> EndoAction:
    """Rational matrix of ``H -> M^* H M`` in the fixed Hermitian basis."""
    m = e.matrix
    mstar = m.conj_transpose()
    cols = [hermitian_coordinates(mstar @ b @ m, e.cm) for b in hermitian_basis(e.n, e.d, e.cm)]
    mat = Matrix.from_columns(cols)
    model = "hermitian" if e.cm else "symmetric"
    return EndoAction(mat, f"ns_pullback(d={e.d}, n={e.n}, {model})", endo_degree(e))


def endo_degree(e: CMEndo) -> int:
    """Degree of the endomorphism: the field norm of ``det M``."""
    dm = det(e.matrix)
    if not dm:
        raise SingularEndoError("endomorphism matrix is singular")
    if not dm.is_integral():
        raise NonIntegralDegreeError(f"det M = {dm} is not in the order")
    deg = norm(dm)
    assert deg.denominator == 1
    return int(deg)


def analytic_char_poly(e: CMEndo) -> list[QuadElem]:
    """Characteristic polynomial of ``M`` over Q(sqrt d), low degree first."""
    return char_poly_coeffs(e.matrix)


def _interpolate(xs: list[Fraction], ys: list[Fraction]) -> RatPoly:
    # Newton divided differences
    coef = list(ys)
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    out = RatPoly([coef[-1]])
    for i in range(n - 2, -1, -1):
        out = out * RatPoly([-xs[i], 1]) + coef[i]
    return out


def product_spectrum_poly(chi: list[QuadElem]) -> RatPoly:
    """Polynomial with roots ``lambda_i * conj(lambda_j)`` over all pairs.

    Built as ``Res_y(chi(y), y^n conj(chi)(x / y))`` at ``n^2 + 1`` integer
    points followed by interpolation.
    """
    n = len(chi) - 1
    bar = [conj(c) for c in chi]
    xs = [Fraction(k) for k in range(n * n + 1)]
    ys = []
    for x in xs:
        # coefficient of y^(n - m) is conj(c_m) * x^m
        q = [bar[n - j] * x ** (n - j) for j in range(n + 1)]
        r = resultant(chi, q)
        if isinstance(r, QuadElem):
            if not r.is_rational():
                raise AssertionError("product spectrum resultant is not rational")
            r = r.a
        ys.append(Fraction(r))
    return _interpolate(xs, ys)


def h11_charpoly(e: CMEndo) -> RatPoly:
    """Characteristic polynomial of the N^1 action, from the analytic spectrum alone.

    CM model: roots ``lambda_i conj(lambda_j)`` for all ``i, j``.
    Non-CM model: roots ``lambda_i lambda_j`` for ``i <= j``.
    """
    endo_degree(e)
    chi = analytic_char_poly(e)
    full = product_spectrum_poly(chi)
    if e.cm:
        return full
    real_chi = RatPoly([c.a for c in chi])
    # prod_{i,j} * prod_i (x - lambda_i^2) = (prod_{i<=j})^2
    return square_root(full * squared_roots_poly(real_chi))
