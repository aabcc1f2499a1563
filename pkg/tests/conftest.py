from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ampdyn import QuadElem

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_ints = st.integers(-6, 6)
rationals = st.fractions(min_value=-8, max_value=8, max_denominator=6)
ring_tags = st.sampled_from([-1, -2, -3, -5, -7, -11, -15])


@st.composite
def quad_elems(draw, d=None, integral=False):
    d = draw(ring_tags) if d is None else d
    coef = small_ints if integral else rationals
    return QuadElem(Fraction(draw(coef)), Fraction(draw(coef)), d)


@st.composite
def rat_matrices(draw, n=None, max_n=5, elements=small_ints):
    n = draw(st.integers(1, max_n)) if n is None else n
    return [[draw(elements) for _ in range(n)] for _ in range(n)]
