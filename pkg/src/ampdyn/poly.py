"""Univariate polynomials with exact coefficients.

Coefficient lists are stored lowest degree first.  The list helpers work over
any exact field (``Fraction`` or ``QuadElem``); :class:`RatPoly` wraps them
for the rational case.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

from .errors import ZeroPolynomialError
from .scalars import as_fraction, format_rational


def trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def poly_add(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        if i < len(a) and i < len(b):
            out.append(a[i] + b[i])
        elif i < len(a):
            out.append(a[i])
        else:
            out.append(b[i])
    return trim(out)


def poly_scale(a: Sequence, s) -> list:
    return trim([x * s for x in a])


def poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [a[0] * 0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return trim(out)


def poly_divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    b = trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = trim(list(a))
    if len(r) < len(b):
        return [], r
    inv_lc = 1 / b[-1]
    q = [b[-1] * 0] * (len(r) - len(b) + 1)
    while len(r) >= len(b) and r:
        k = len(r) - len(b)
        c = r[-1] * inv_lc
        q[k] = c
        for i, y in enumerate(b):
            r[i + k] = r[i + k] - c * y
        r.pop()
        trim(r)
    return trim(q), r


def poly_eval(a: Sequence, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def resultant(a: Sequence, b: Sequence):
    """Resultant of two polynomials over a field, by the Euclidean recursion."""
    a = trim([Fraction(x) if isinstance(x, int) else x for x in a])
    b = trim([Fraction(x) if isinstance(x, int) else x for x in b])
    if not a or not b:
        return 0
    sign = 1
    acc = 1
    while True:
        m, n = len(a) - 1, len(b) - 1
        if n == 0:
            return sign * acc * b[0] ** m
        _, r = poly_divmod(a, b)
        if not r:
            return 0 * acc
        k = len(r) - 1
        if (m * n) % 2:
            sign = -sign
        acc = acc * b[-1] ** (m - k)
        a, b = b, r


class RatPoly:
    """Polynomial with rational coefficients, canonical (no trailing zeros)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs: tuple[Fraction, ...] = tuple(trim([as_fraction(c) for c in coeffs]))

    @classmethod
    def x(cls) -> "RatPoly":
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> "RatPoly":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "RatPoly":
        p = cls([1])
        for r in roots:
            p = p * cls([-as_fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RatPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def _lift(self, other) -> "RatPoly":
        return other if isinstance(other, RatPoly) else RatPoly([other])

    def __add__(self, other):
        return RatPoly(poly_add(self.coeffs, self._lift(other).coeffs))

    __radd__ = __add__

    def __neg__(self):
        return RatPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        return RatPoly(poly_mul(self.coeffs, self._lift(other).coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RatPoly":
        out = RatPoly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other) -> tuple["RatPoly", "RatPoly"]:
        q, r = poly_divmod(self.coeffs, self._lift(other).coeffs)
        return RatPoly(q), RatPoly(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "RatPoly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def __call__(self, x):
        return poly_eval(self.coeffs, x)

    def monic(self) -> "RatPoly":
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no monic form")
        return RatPoly([c / self.lc for c in self.coeffs])

    def derivative(self) -> "RatPoly":
        return RatPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def reversal(self) -> "RatPoly":
        """``x**deg * p(1/x)``."""
        return RatPoly(reversed(self.coeffs))

    def scale_arg(self, c) -> "RatPoly":
        """``p(c*x)``."""
        c = as_fraction(c)
        out, pw = [], Fraction(1)
        for a in self.coeffs:
            out.append(a * pw)
            pw *= c
        return RatPoly(out)

    def negate_arg(self) -> "RatPoly":
        return self.scale_arg(-1)

    def compose(self, q: "RatPoly") -> "RatPoly":
        acc = RatPoly()
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def valuation(self) -> int:
        """Multiplicity of the root 0."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ZeroPolynomialError("zero polynomial")

    def shift_down(self, k: int) -> "RatPoly":
        return RatPoly(self.coeffs[k:])

    def is_squarefree(self) -> bool:
        return gcd(self, self.derivative()).degree == 0

    def __repr__(self):
        return f"RatPoly([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mag = abs(c)
            s = "-" if c < 0 else "+"
            if i == 0:
                body = format_rational(mag)
            else:
                xpow = "x" if i == 1 else f"x^{i}"
                body = xpow if mag == 1 else f"{format_rational(mag)}*{xpow}"
            terms.append((s, body))
        first_s, first_b = terms[0]
        out = ("-" if first_s == "-" else "") + first_b
        for s, b in terms[1:]:
            out += f" {s} {b}"
        return out

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, obj) -> "RatPoly":
        return cls(as_fraction(c) for c in obj)


def gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic gcd (zero if both are zero)."""
    while b:
        a, b = b, a % b
    return a.monic() if a else a


def lcm(a: RatPoly, b: RatPoly) -> RatPoly:
    if not a or not b:
        return RatPoly()
    return (a * b // gcd(a, b)).monic()


def squarefree_decomposition(p: RatPoly) -> list[tuple[RatPoly, int]]:
    """Yun's algorithm: ``p = lc * prod(s_k**k)`` with coprime squarefree monic ``s_k``."""
    if not p:
        raise ZeroPolynomialError("zero polynomial")
    p = p.monic()
    out: list[tuple[RatPoly, int]] = []
    if p.degree == 0:
        return out
    dp = p.derivative()
    g = gcd(p, dp)
    w = p // g
    y = dp // g
    k = 1
    while w.degree > 0:
        z = y - w.derivative()
        h = gcd(w, z)
        if h.degree > 0:
            out.append((h, k))
        w = w // h
        y = z // h
        k += 1
    return out


def squarefree_part(p: RatPoly) -> RatPoly:
    out = RatPoly([1])
    for s, _ in squarefree_decomposition(p):
        out = out * s
    return out


def square_root(p: RatPoly) -> RatPoly:
    """Exact square root of a perfect square with positive leading coefficient."""
    if not p:
        return RatPoly()
    if p.degree % 2:
        raise ArithmeticError("odd degree polynomial is not a square")
    lc = p.lc
    if lc < 0:
        raise ArithmeticError("negative leading coefficient")
    rn, rd = isqrt(lc.numerator), isqrt(lc.denominator)
    if rn * rn != lc.numerator or rd * rd != lc.denominator:
        raise ArithmeticError("leading coefficient is not a rational square")
    m = p.degree // 2
    # solve for q from the top down: q^2 = p
    q = [Fraction(0)] * (m + 1)
    q[m] = Fraction(rn, rd)
    for k in range(m - 1, -1, -1):
        # coefficient of x^(m + k) in q^2 is 2 q_m q_k + sum_{k<i<m} q_i q_{m+k-i}
        s = sum((q[i] * q[m + k - i] for i in range(k + 1, m)), Fraction(0))
        q[k] = (p[m + k] - s) / (2 * q[m])
    root = RatPoly(q)
    if root * root != p:
        raise ArithmeticError("polynomial is not a perfect square")
    return root
