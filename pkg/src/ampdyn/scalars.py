"""Exact scalars: rationals, imaginary quadratic integers, and complex balls.

Rationals are plain :class:`fractions.Fraction` values.  ``QuadElem`` holds an
element ``a + b*omega`` of the maximal order of Q(sqrt(d)) for a negative
squarefree ``d``, where ``omega = sqrt(d)`` when ``d % 4 in (2, 3)`` and
``omega = (1 + sqrt(d)) / 2`` when ``d % 4 == 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

from .errors import AmpdynError, RingMismatchError

Rational = Fraction
Scalar = Union[int, Fraction]


def as_fraction(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise AmpdynError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise AmpdynError(f"not a rational: {x!r}") from exc
    raise AmpdynError(f"not a rational: {x!r}")


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        if n % p == 0:
            n //= p
        p += 1
    return True


def omega_relation(d: int) -> tuple[int, Fraction]:
    """Return ``(t, s)`` with ``omega**2 = t*omega + s``."""
    if d % 4 == 1:
        return 1, Fraction(d - 1, 4)
    return 0, Fraction(d)


def check_ring_tag(d: int) -> int:
    if not isinstance(d, int) or isinstance(d, bool) or d >= 0 or not is_squarefree(d):
        raise AmpdynError(f"ring tag must be a negative squarefree integer, got {d!r}")
    return d


@dataclass(frozen=True)
class QuadElem:
    """Element ``a + b*omega`` of the maximal order tagged by ``d``."""

    a: Fraction
    b: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", as_fraction(self.b))
        check_ring_tag(self.d)

    @classmethod
    def omega(cls, d: int) -> "QuadElem":
        return cls(Fraction(0), Fraction(1), d)

    def _coerce(self, other) -> "QuadElem":
        if isinstance(other, QuadElem):
            if other.d != self.d:
                raise RingMismatchError(f"ring tags differ: {self.d} vs {other.d}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadElem(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadElem(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadElem(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        t, s = omega_relation(self.d)
        bb = self.b * o.b
        return QuadElem(self.a * o.a + bb * s, self.a * o.b + self.b * o.a + bb * t, self.d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadElem":
        n = norm(self)
        if n == 0:
            raise ZeroDivisionError("QuadElem division by zero")
        c = conj(self)
        return QuadElem(c.a / n, c.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadElem(Fraction(1), Fraction(0), self.d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, QuadElem):
            return (self.a, self.b, self.d) == (other.a, other.b, other.d)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self) -> bool:
        return self.b == 0

    def is_integral(self) -> bool:
        return self.a.denominator == 1 and self.b.denominator == 1

    def __repr__(self):
        return f"QuadElem({format_rational(self.a)}, {format_rational(self.b)}, d={self.d})"

    def __str__(self):
        if self.b == 0:
            return format_rational(self.a)
        return f"{format_rational(self.a)}{'+' if self.b > 0 else '-'}{format_rational(abs(self.b))}w"

    def to_json(self, with_ring: bool = True) -> dict:
        out = {"a": format_rational(self.a), "b": format_rational(self.b)}
        if with_ring:
            out["d"] = self.d
        return out

    @classmethod
    def from_json(cls, obj, d: int | None = None) -> "QuadElem":
        if isinstance(obj, (int, str)):
            if d is None:
                raise AmpdynError("scalar entry needs a ring tag")
            return cls(as_fraction(obj), Fraction(0), d)
        if not isinstance(obj, dict) or "a" not in obj:
            raise AmpdynError(f"malformed QuadElem: {obj!r}")
        tag = obj.get("d", d)
        if tag is None:
            raise AmpdynError("QuadElem without ring tag")
        if d is not None and tag != d:
            raise RingMismatchError(f"entry ring tag {tag} differs from {d}")
        return cls(as_fraction(obj["a"]), as_fraction(obj.get("b", "0")), tag)


def conj(x: QuadElem) -> QuadElem:
    """Galois conjugate; fixes rational elements."""
    if not isinstance(x, QuadElem):
        return x
    t, _ = omega_relation(x.d)
    return QuadElem(x.a + t * x.b, -x.b, x.d)


def norm(x: QuadElem) -> Fraction:
    """Field norm ``x * conj(x)``, a nonnegative rational."""
    if not isinstance(x, QuadElem):
        return Fraction(x) ** 2
    t, s = omega_relation(x.d)
    # (a + b w)(a + b t - b w) = a^2 + a b t - b^2 s
    return x.a * x.a + x.a * x.b * t - x.b * x.b * s


# --------------------------------------------------------------------------
# complex balls


def round_dyadic(x: Fraction, bits: int) -> Fraction:
    """Nearest multiple of ``2**-bits``."""
    scale = 1 << bits
    num = x.numerator * scale
    q, r = divmod(num, x.denominator)
    if 2 * r >= x.denominator:
        q += 1
    return Fraction(q, scale)


def ceil_dyadic(x: Fraction, bits: int) -> Fraction:
    scale = 1 << bits
    return Fraction(-((-x.numerator * scale) // x.denominator), scale)


def sqrt_upper(x: Fraction, bits: int) -> Fraction:
    """Dyadic upper bound of ``sqrt(x)`` within ``2**-bits``."""
    if x <= 0:
        return Fraction(0)
    scale = 1 << bits
    n = (x.numerator * scale * scale) // x.denominator
    r = isqrt(n)
    if Fraction(r * r, scale * scale) == x:
        return Fraction(r, scale)
    return Fraction(r + 1, scale)


def sqrt_lower(x: Fraction, bits: int) -> Fraction:
    if x <= 0:
        return Fraction(0)
    scale = 1 << bits
    n = (x.numerator * scale * scale) // x.denominator
    return Fraction(isqrt(n), scale)


@dataclass(frozen=True)
class ComplexBall:
    """Closed disc ``{z : |z - (re + i*im)| <= rad}`` with exact rational data."""

    re: Fraction
    im: Fraction
    rad: Fraction = Fraction(0)

    def __post_init__(self):
        if self.rad < 0:
            raise AmpdynError("negative ball radius")

    @property
    def center(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __add__(self, other: "ComplexBall") -> "ComplexBall":
        return ComplexBall(self.re + other.re, self.im + other.im, self.rad + other.rad)

    def __mul__(self, other: "ComplexBall") -> "ComplexBall":
        re = self.re * other.re - self.im * other.im
        im = self.re * other.im + self.im * other.re
        # |re| + |im| bounds the modulus from above
        m1 = abs(self.re) + abs(self.im)
        m2 = abs(other.re) + abs(other.im)
        return ComplexBall(re, im, m1 * other.rad + m2 * self.rad + self.rad * other.rad)

    def inflate(self, r: Fraction) -> "ComplexBall":
        return ComplexBall(self.re, self.im, self.rad + r)

    def contains_point(self, re: Fraction, im: Fraction) -> bool:
        return (re - self.re) ** 2 + (im - self.im) ** 2 <= self.rad ** 2

    def contains(self, other: "ComplexBall") -> bool:
        if other.rad > self.rad:
            return False
        gap = self.rad - other.rad
        return (other.re - self.re) ** 2 + (other.im - self.im) ** 2 <= gap * gap

    def overlaps(self, other: "ComplexBall") -> bool:
        r = self.rad + other.rad
        return (other.re - self.re) ** 2 + (other.im - self.im) ** 2 <= r * r

    def compare_modulus(self, radius_sq: Fraction) -> int:
        """+1 if the whole ball lies outside ``|z|**2 = radius_sq``, -1 inside, 0 otherwise."""
        radius_sq = Fraction(radius_sq)
        c2 = self.re ** 2 + self.im ** 2
        if self.rad == 0:
            return (c2 > radius_sq) - (c2 < radius_sq)
        bits = max(64, (1 / self.rad).__ceil__().bit_length() + 16)
        r_hi = sqrt_upper(radius_sq, bits)
        r_lo = sqrt_lower(radius_sq, bits)
        if c2 > (r_hi + self.rad) ** 2:
            return 1
        if r_lo > self.rad and c2 < (r_lo - self.rad) ** 2:
            return -1
        return 0

    def to_json(self) -> dict:
        return {"re": format_rational(self.re), "im": format_rational(self.im),
                "rad": format_rational(self.rad)}


def embed(x, prec: int) -> ComplexBall:
    """Enclose the image of ``x`` under ``omega -> root with positive imaginary part``.

    The returned ball has radius at most ``2**(1 - prec)``.
    """
    if prec < 2:
        raise AmpdynError("precision must be at least 2 bits")
    if not isinstance(x, QuadElem):
        x = Fraction(x)
        c = round_dyadic(x, prec + 1)
        return ComplexBall(c, Fraction(0), ceil_dyadic(abs(x - c), prec + 3))
    t, _ = omega_relation(x.d)
    re = x.a + x.b * Fraction(t, 2)
    c_re = round_dyadic(re, prec + 1)
    err = abs(re - c_re)
    # im = k * sqrt(|d|) with k = b or b/2
    k = x.b / 2 if t else x.b
    if k == 0:
        c_im = Fraction(0)
    else:
        m = prec + 3 + max(1, abs(k).__ceil__().bit_length())
        scale = 1 << m
        s = isqrt(-x.d * scale * scale)
        if s * s == -x.d * scale * scale:
            approx = k * Fraction(s, scale)
            c_im = round_dyadic(approx, prec + 1)
            err += abs(approx - c_im)
        else:
            approx = k * Fraction(2 * s + 1, 2 * scale)
            c_im = round_dyadic(approx, prec + 1)
            # sqrt(|d|) lies in [s, s+1]/2^m; the midpoint is within 2^-(m+1)
            err += abs(approx - c_im) + abs(k) / (2 * scale)
    return ComplexBall(c_re, c_im, ceil_dyadic(err, prec + 3))
