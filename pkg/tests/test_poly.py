from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from ampdyn import RatPoly, gcd, lcm, squarefree_decomposition
from ampdyn.poly import resultant, square_root

from conftest import rationals

X = sympy.Symbol("x")
polys = st.lists(rationals, min_size=1, max_size=7).map(RatPoly)


def to_sympy(p: RatPoly):
    return sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in p.coeffs])) or [0], X)


def from_sympy(p) -> RatPoly:
    return RatPoly([Fraction(int(c.p), int(c.q)) for c in reversed(sympy.Poly(p, X).all_coeffs())])


def test_basic_arithmetic():
    p = RatPoly([1, 2, 1])
    assert p == RatPoly([1, 1]) ** 2
    assert p.degree == 2 and RatPoly().degree == -1
    q, r = divmod(RatPoly([-1, 0, 0, 1]), RatPoly([-1, 1]))
    assert q == RatPoly([1, 1, 1]) and not r
    assert p(Fraction(1, 2)) == Fraction(9, 4)
    assert str(RatPoly([36, 108, 1])) == "x^2 + 108*x + 36"
    assert RatPoly.from_json(p.to_json()) == p
    assert RatPoly([0, 0, 1, 2]).valuation() == 2
    assert RatPoly([1, 2, 3]).reversal() == RatPoly([3, 2, 1])


def test_square_root():
    p = RatPoly.from_roots([1, 2, Fraction(1, 3)])
    assert square_root(p * p) == p.monic()
    with pytest.raises(ArithmeticError):
        square_root(RatPoly([-2, 0, 1]))


def test_resultant_on_integers_stays_exact():
    assert resultant([1, 1], [0, 0, 0, 1]) == -1
    assert isinstance(resultant([1, 1], [2, 0, 0, 1]), Fraction)


@given(polys, polys)
def test_gcd_lcm_match_sympy(a, b):
    if not a or not b:
        return
    g = gcd(a, b)
    assert g == from_sympy(sympy.gcd(to_sympy(a), to_sympy(b)).monic())
    assert lcm(a, b) == from_sympy(sympy.lcm(to_sympy(a), to_sympy(b)).monic())


@given(polys, polys)
def test_resultant_matches_sylvester_determinant(a, b):
    if a.degree < 1 or b.degree < 1:
        return
    m, n = a.degree, b.degree
    size = m + n
    rows = [([0] * i + list(reversed(a.coeffs)) + [0] * size)[:size] for i in range(n)]
    rows += [([0] * i + list(reversed(b.coeffs)) + [0] * size)[:size] for i in range(m)]
    sylvester = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows]).det()
    assert resultant(list(a.coeffs), list(b.coeffs)) == Fraction(str(sylvester))


@given(st.lists(st.tuples(st.integers(-3, 3), st.integers(1, 3)), min_size=1, max_size=4))
def test_squarefree_decomposition_recovers_product(factors):
    p = RatPoly([1])
    for root, k in factors:
        p = p * RatPoly([-root, 1]) ** k
    parts = squarefree_decomposition(p)
    prod = RatPoly([1])
    for s, k in parts:
        assert s.is_squarefree()
        prod = prod * s ** k
    assert prod == p.monic()
