"""
Invariant cones and the orbit-cone witness
==========================================

For an invertible phi with phi(C) = C, a vector l in the interior with
phi(l) - l also interior forces every eigenvalue outside the unit disc.
Conversely, when phi expands, v = (phi - id)^-1 e stays in C for e in C, and
v eventually lies in the cone spanned by phi^-1 e, ..., phi^-m e.
"""

from fractions import Fraction

from ampdyn import Matrix, PolyCone, contains, inverse, is_invariant, orbit_cone_witness, verify_pf_lemma

Q = PolyCone.orthant(3)

# a monomial matrix: permutes the coordinate rays and rescales them.  The
# scales multiply to 1/3 around the 3-cycle, so phi^3 = I/3 contracts.
phi = Matrix([[0, 2, 0], [0, 0, Fraction(1, 3)], [Fraction(1, 2), 0, 0]])
print("invariant:", is_invariant(phi, Q))
rep = verify_pf_lemma(phi, Q)
print(rep.premise_ok, rep.certificate.get("ell"), rep.certificate.get("h"))

# Doubling gives cycle product 8/3 > 1: now the premise holds and the spectrum follows.
rep = verify_pf_lemma(phi.scale(2), Q)
print(rep.premise_ok, rep.spectral_ok, rep.certificate["unit_profile"])

# The orbit-cone witness on a 3x3 expanding map
psi = phi.scale(2)
e = (1, 0, 2)
v = inverse(psi - Matrix.identity(3)) @ e
print("v =", [str(x) for x in v], "in C:", contains(Q, v).member)
rep = orbit_cone_witness(psi, v)
for m, residual, inside in rep.partial_sum_trace:
    print(f"m={m}  |phi^-m v| = {residual}  v in relint E_m: {inside}")

# Invariance is essential: [[1, 2], [2, 1]] maps the orthant into itself, the
# premise holds with l = (1, 1), yet -1 is an eigenvalue.  The verifier refuses.
try:
    verify_pf_lemma(Matrix([[1, 2], [2, 1]]), PolyCone.orthant(2))
except ValueError as exc:
    print(type(exc).__name__, exc)
