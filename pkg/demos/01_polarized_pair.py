"""
Two polarized maps whose composition is not int-amplified
==========================================================

Endomorphisms of E x E, with E the curve with CM by Z[i], are 2x2 matrices
over Z[i].  Their pullback on N^1 is the map H -> M^* H M on 2x2 Hermitian
forms, a 4x4 rational matrix.
"""

from ampdyn import CMEndo, classify, compose_min_power, h11_charpoly, ns_pullback, same_modulus

f = CMEndo.from_rows([[1, -5], [1, 1]])
g = CMEndo.from_rows([[11, -105], [1, -9]])

# Eigenvalues of f on H^{1,0} are 1 +- i*sqrt(5); on N^1 they become the
# products lambda_i * conj(lambda_j): 6, 6 and -4 +- 2i*sqrt(5), all of modulus 6.
phi_f = ns_pullback(f)
print(phi_f.mat)
print("char poly:", h11_charpoly(f))
print("same modulus:", same_modulus(h11_charpoly(f)).to_json())

for name, e in (("f", f), ("g", g)):
    rep = classify(e)
    print(name, rep.polarized_profile, "q^2 =", rep.polarized_q_sq, "diagonalizable:", rep.diagonalizable)

# The product matrix is real, [[6, -60], [12, -114]].  Its eigenvalues are the
# roots of x^2 + 108x + 36, one of which is about -0.33; squaring it gives an
# N^1 eigenvalue inside the unit disc.
h = f @ g
print(h.matrix)
rep = classify(h)
print("int-amplified:", rep.int_amplified, " profile:", rep.unit_profile.as_tuple())

# Replacing f by a power repairs this.  The norm certificate gives an i with
# |phi_f^-i| * |phi_g^-1| < 1; the direct test may pass earlier.
cert = compose_min_power(phi_f, ns_pullback(g))
print(cert.to_json())
