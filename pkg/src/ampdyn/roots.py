"""Locating polynomial roots relative to circles centred at the origin.

The exact path never evaluates a root numerically:

* roots at 0 are split off by valuation and multiplicities by Yun's
  squarefree decomposition;
* for a squarefree ``s`` the factor ``g = gcd(s, reversal(s))`` carries every
  root on the unit circle.  Its on-circle roots become real roots under the
  Cayley substitution ``z = (1 + i t) / (1 - i t)`` and are counted with a
  Sturm sequence; the remaining roots of ``g`` come in pairs ``(z, 1/conj z)``;
* the cofactor ``s / g`` has no pair ``z, 1/conj z`` of roots, so its Schur-Cohn
  Hermitian form is nonsingular and its inertia splits the roots into those
  inside and outside the disc.  The inertia is read off the (real-rooted)
  characteristic polynomial with Descartes' rule of signs.

Other radii reduce to the unit circle by rescaling, after passing to the
polynomial of squared roots when ``radius_sq`` is not a rational square.

:func:`root_balls` is an independent validated-numerics route built on Smith's
inclusion disks, used as a cross-check and for reporting.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

import gmpy2
import mpmath

from .errors import AmpdynError, ZeroPolynomialError
from .matrices import Matrix, char_poly, min_poly
from .poly import RatPoly, gcd, poly_add, poly_mul, squarefree_decomposition
from .scalars import ComplexBall, as_fraction, ceil_dyadic, format_rational, round_dyadic, sqrt_upper


@dataclass(frozen=True)
class CircleProfile:
    inside: int
    on: int
    outside: int
    radius_sq: Fraction = Fraction(1)

    @property
    def degree(self) -> int:
        return self.inside + self.on + self.outside

    def __add__(self, other: "CircleProfile") -> "CircleProfile":
        if self.radius_sq != other.radius_sq:
            raise AmpdynError("cannot add profiles at different radii")
        return CircleProfile(self.inside + other.inside, self.on + other.on,
                             self.outside + other.outside, self.radius_sq)

    def scaled(self, k: int) -> "CircleProfile":
        return CircleProfile(k * self.inside, k * self.on, k * self.outside, self.radius_sq)

    def as_tuple(self) -> tuple[int, int, int]:
        return self.inside, self.on, self.outside

    def to_json(self) -> dict:
        return {"inside": self.inside, "on": self.on, "outside": self.outside,
                "radius_sq": format_rational(self.radius_sq)}

    @classmethod
    def from_json(cls, obj: dict) -> "CircleProfile":
        return cls(int(obj["inside"]), int(obj["on"]), int(obj["outside"]),
                   as_fraction(obj.get("radius_sq", "1")))


# --------------------------------------------------------------------------
# real-root counting


def sturm_sequence(p: RatPoly) -> list[RatPoly]:
    seq = [p, p.derivative()]
    while seq[-1]:
        r = -(seq[-2] % seq[-1])
        if not r:
            break
        seq.append(r)
    return [q for q in seq if q]


def _sign_changes(values) -> int:
    signs = [v > 0 for v in values if v]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: RatPoly) -> int:
    """Number of distinct real roots."""
    if not p:
        raise ZeroPolynomialError("zero polynomial")
    if p.degree <= 0:
        return 0
    seq = sturm_sequence(p)
    at_pos_inf = [q.lc for q in seq]
    at_neg_inf = [q.lc * (-1) ** q.degree for q in seq]
    return _sign_changes(at_neg_inf) - _sign_changes(at_pos_inf)


def count_positive_roots_real_rooted(p: RatPoly) -> int:
    """Descartes' count, exact when every root of ``p`` is real."""
    return _sign_changes(p.coeffs)


# --------------------------------------------------------------------------
# unit circle


def _cayley_transform(g: RatPoly) -> tuple[RatPoly, RatPoly]:
    """Real and imaginary parts of ``sum a_k (1 + i t)^k (1 - i t)^(m - k)``."""
    m = g.degree
    # powers of (1 + i t) and (1 - i t) as (re, im) coefficient lists
    plus = [([Fraction(1)], [])]
    minus = [([Fraction(1)], [])]
    for _ in range(m):
        plus.append(_cmul(plus[-1], ([Fraction(1)], [Fraction(0), Fraction(1)])))
        minus.append(_cmul(minus[-1], ([Fraction(1)], [Fraction(0), Fraction(-1)])))
    re: list = []
    im: list = []
    for k, a in enumerate(g.coeffs):
        if not a:
            continue
        tr, ti = _cmul(plus[k], minus[m - k])
        re = poly_add(re, [a * c for c in tr])
        im = poly_add(im, [a * c for c in ti])
    return RatPoly(re), RatPoly(im)


def _cmul(x, y):
    (a, b), (c, d) = x, y
    re = poly_add(poly_mul(a, c), [-v for v in poly_mul(b, d)])
    im = poly_add(poly_mul(a, d), poly_mul(b, c))
    return re, im


def count_unit_circle_roots(g: RatPoly) -> int:
    """Distinct roots of ``g`` on the unit circle."""
    if not g:
        raise ZeroPolynomialError("zero polynomial")
    if g.degree <= 0:
        return 0
    re, im = _cayley_transform(g)
    common = gcd(re, im)
    n = count_real_roots(common) if common else 0
    if g(Fraction(-1)) == 0:
        n += 1
    return n


def schur_cohn_matrix(p: RatPoly) -> Matrix:
    """Symmetric matrix ``B^T B - A^T A`` whose positive inertia counts roots inside.

    ``A`` and ``B`` are lower triangular Toeplitz matrices with first columns
    ``(a_0, ..., a_{n-1})`` and ``(a_n, ..., a_1)``.
    """
    n = p.degree
    a = [p[i] for i in range(n + 1)]
    A = Matrix([[a[i - j] if j <= i else 0 for j in range(n)] for i in range(n)])
    B = Matrix([[a[n - (i - j)] if j <= i else 0 for j in range(n)] for i in range(n)])
    return B.T @ B - A.T @ A


def _inside_outside(h: RatPoly) -> tuple[int, int]:
    """(inside, outside) for ``h`` without roots ``z, 1/conj z`` in common."""
    if h.degree <= 0:
        return 0, 0
    chi = char_poly(schur_cohn_matrix(h))
    if chi[0] == 0:
        raise AssertionError("Schur-Cohn form is singular; reciprocal roots were not split off")
    pos = count_positive_roots_real_rooted(chi)
    neg = count_positive_roots_real_rooted(chi.negate_arg())
    return pos, neg


def _squarefree_unit_profile(s: RatPoly) -> CircleProfile:
    v = s.valuation()
    s = s.shift_down(v)
    g = gcd(s, s.reversal())
    on = count_unit_circle_roots(g)
    paired = g.degree - on
    h = s // g
    inside, outside = _inside_outside(h)
    return CircleProfile(v + inside + paired // 2, on, outside + paired // 2)


def unit_profile(p: RatPoly) -> CircleProfile:
    """Exact (inside, on, outside) counts at the unit circle, with multiplicity."""
    if not p:
        raise ZeroPolynomialError("zero polynomial")
    out = CircleProfile(0, 0, 0)
    for s, k in squarefree_decomposition(p):
        out = out + _squarefree_unit_profile(s).scaled(k)
    return out


def rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    n, d = isqrt(x.numerator), isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


def rational_root(x: Fraction, k: int) -> Fraction | None:
    """Exact nonnegative ``k``-th root of a nonnegative rational, if rational."""
    if x < 0:
        return None
    n, ok_n = gmpy2.iroot(gmpy2.mpz(x.numerator), k)
    d, ok_d = gmpy2.iroot(gmpy2.mpz(x.denominator), k)
    if ok_n and ok_d:
        return Fraction(int(n), int(d))
    return None


def squared_roots_poly(p: RatPoly) -> RatPoly:
    """Polynomial whose roots are the squares of the roots of ``p``."""
    even = (p * p.negate_arg()).coeffs
    q = RatPoly(even[::2])
    return q if p.degree % 2 == 0 else -q


def circle_profile(p: RatPoly, radius_sq=Fraction(1)) -> CircleProfile:
    """Counts of roots with ``|z|**2`` below, equal to and above ``radius_sq``."""
    radius_sq = as_fraction(radius_sq)
    if not p:
        raise ZeroPolynomialError("zero polynomial")
    if radius_sq <= 0:
        raise AmpdynError("radius_sq must be positive")
    if radius_sq == 1:
        prof = unit_profile(p)
    else:
        r = rational_sqrt(radius_sq)
        if r is not None:
            prof = unit_profile(p.scale_arg(r))
        else:
            # |z|^2 vs r  <=>  |z^2| vs r, and r^2 is a rational square
            prof = unit_profile(squared_roots_poly(p).scale_arg(radius_sq))
    return CircleProfile(prof.inside, prof.on, prof.outside, radius_sq)


# --------------------------------------------------------------------------
# equal moduli


@dataclass(frozen=True)
class ModulusVerdict:
    """Outcome of :func:`same_modulus`.

    ``kind`` is one of ``AllEqual``, ``AllEqualIrrational``, ``NotAllEqual``
    or ``Unknown``.  ``q_sq`` is the common squared modulus when rational;
    for ``AllEqualIrrational`` the certificate records ``q_sq**n``.
    """

    kind: str
    q_sq: Fraction | None = None
    certificate: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.q_sq is not None:
            out["q_sq"] = format_rational(self.q_sq)
        if self.certificate:
            out["certificate"] = self.certificate
        return out


def companion(p: RatPoly) -> Matrix:
    p = p.monic()
    n = p.degree
    rows = [[0] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = 1
    for i in range(n):
        rows[i][n - 1] = -p[i]
    return Matrix(rows)


def same_modulus(p: RatPoly, prec: int | None = None) -> ModulusVerdict:
    """Decide exactly whether all roots of ``p`` share one modulus.

    If every root has modulus ``rho`` then ``rho**(2n) = p(0)**2`` for monic
    ``p`` of degree ``n``.  When that forces a rational ``rho**2`` the test is a
    circle profile at that radius; otherwise the ``n``-th powers of the roots
    are tested against the rational radius ``|p(0)|``.  ``prec`` only controls
    the optional ball witness attached to ``NotAllEqual`` verdicts.
    """
    if not p:
        raise ZeroPolynomialError("zero polynomial")
    p = p.monic()
    n = p.degree
    if n <= 0:
        raise AmpdynError("constant polynomial has no roots")
    a0 = p[0]
    if a0 == 0:
        if p == RatPoly([0] * n + [1]):
            return ModulusVerdict("AllEqual", Fraction(0), {"method": "zero roots"})
        return _not_all_equal(p, prec)
    target = a0 * a0
    q_sq = rational_root(target, n)
    if q_sq is not None:
        prof = circle_profile(p, q_sq)
        if prof.on == n:
            return ModulusVerdict("AllEqual", q_sq, {"method": "circle profile", "profile": prof.to_json()})
        return _not_all_equal(p, prec, prof)
    powered = char_poly(companion(p) ** n)
    prof = circle_profile(powered, target)
    if prof.on == n:
        return ModulusVerdict("AllEqualIrrational", None,
                              {"method": "root powers", "q_sq_pow_n": format_rational(target), "n": n})
    return _not_all_equal(p, prec)


def _not_all_equal(p: RatPoly, prec: int | None, prof: CircleProfile | None = None) -> ModulusVerdict:
    cert: dict = {}
    if prof is not None:
        cert["profile"] = prof.to_json()
    if prec is not None:
        balls = root_balls(p, prec)
        lo = min(balls, key=lambda rb: _modsq_hi(rb.ball))
        hi = max(balls, key=lambda rb: _modsq_lo(rb.ball))
        if _modsq_hi(lo.ball) < _modsq_lo(hi.ball):
            cert["smaller"] = lo.ball.to_json()
            cert["larger"] = hi.ball.to_json()
    return ModulusVerdict("NotAllEqual", None, cert)


def _modsq_lo(b: ComplexBall) -> Fraction:
    c = sqrt_upper(b.re ** 2 + b.im ** 2, 128) - Fraction(1, 1 << 128)
    c -= b.rad
    return c * c if c > 0 else Fraction(0)


def _modsq_hi(b: ComplexBall) -> Fraction:
    c = sqrt_upper(b.re ** 2 + b.im ** 2, 128) + b.rad
    return c * c


# --------------------------------------------------------------------------
# diagonalizability


def is_diagonalizable(m: Matrix) -> bool:
    """True iff the minimal polynomial is squarefree (diagonalizable over C)."""
    return min_poly(m).is_squarefree()


# --------------------------------------------------------------------------
# validated root enclosures


@dataclass(frozen=True)
class RootBall:
    ball: ComplexBall
    multiplicity: int

    def to_json(self) -> dict:
        return {**self.ball.to_json(), "multiplicity": self.multiplicity}


def _to_fraction(x: mpmath.mpf) -> Fraction:
    sign, man, exp, _ = x._mpf_
    man = -int(man) if sign else int(man)
    return Fraction(man * (1 << exp)) if exp >= 0 else Fraction(man, 1 << -exp)


def _smith_balls(s: RatPoly, work: int) -> list[ComplexBall] | None:
    """Inclusion disks for the squarefree monic ``s``, or None if not separated."""
    n = s.degree
    if n == 1:
        root = -s[0] / s[1]
        c = round_dyadic(root, work)
        return [ComplexBall(c, Fraction(0), ceil_dyadic(abs(root - c), work + 2))]
    with mpmath.workprec(work + 32):
        try:
            approx = mpmath.polyroots([mpmath.mpf(c.numerator) / c.denominator for c in reversed(s.coeffs)],
                                      maxsteps=400, extraprec=2 * work + 64)
        except mpmath.libmp.libhyper.NoConvergence:
            return None
        zs = []
        for z in approx:
            z = mpmath.mpc(z)
            zs.append((round_dyadic(_to_fraction(z.real), work), round_dyadic(_to_fraction(z.imag), work)))
    if len(set(zs)) < n:
        return None
    balls = []
    for i, (x, y) in enumerate(zs):
        # p(z_i) by exact complex Horner
        pr, pi = Fraction(0), Fraction(0)
        for c in reversed(s.coeffs):
            pr, pi = pr * x - pi * y + c, pr * y + pi * x
        den = Fraction(1)
        for j, (u, w) in enumerate(zs):
            if j != i:
                den *= (x - u) ** 2 + (y - w) ** 2
        rad_sq = n * n * (pr * pr + pi * pi) / den
        balls.append(ComplexBall(x, y, sqrt_upper(rad_sq, work + 4)))
    return balls


def root_balls(p: RatPoly, prec: int = 64, max_prec: int = 8192) -> list[RootBall]:
    """Disjoint validated enclosures of the distinct roots of ``p``.

    Each ball contains exactly one distinct root, of the reported multiplicity.
    Radii are at most ``2**(1 - prec) * max(1, |center|)``.
    """
    if not p:
        raise ZeroPolynomialError("zero polynomial")
    if prec < 2:
        raise AmpdynError("precision must be at least 2 bits")
    factors = squarefree_decomposition(p)
    work = prec + 8
    while work <= max_prec:
        out: list[RootBall] = []
        ok = True
        for s, k in factors:
            balls = _smith_balls(s, work)
            if balls is None:
                ok = False
                break
            out.extend(RootBall(b, k) for b in balls)
        if ok and _separated(out) and all(_tight(rb.ball, prec) for rb in out):
            return sorted(out, key=lambda rb: (rb.ball.re, rb.ball.im))
        work *= 2
    raise AmpdynError(f"root enclosures not separated at {max_prec} bits")


def _separated(balls: list[RootBall]) -> bool:
    for i in range(len(balls)):
        for j in range(i + 1, len(balls)):
            if balls[i].ball.overlaps(balls[j].ball):
                return False
    return True


def _tight(b: ComplexBall, prec: int) -> bool:
    scale = max(Fraction(1), abs(b.re) + abs(b.im))
    return b.rad <= scale * Fraction(2, 1 << prec)
