"""
Int-amplified but not polarized, amplified but not int-amplified
=================================================================
"""

from ampdyn import CMEndo, Matrix, RatPoly, circle_profile, classify, min_poly, ns_pullback, root_balls

# 2 * [[1, 0], [1, 1]] on E x E.  Every N^1 eigenvalue equals 4, so the map is
# int-amplified, but the Jordan block survives in the pullback.
shear = CMEndo.from_rows([[2, 0], [2, 2]])
phi = ns_pullback(shear)
print(phi.mat)
print("min poly:", min_poly(phi.mat))
print(classify(phi).to_json())

# Doubling composed with the cube of the Fibonacci matrix [[2, 1], [1, 1]].
# On H^{1,0} the eigenvalues are 2a^3 and 2a^-3 with a = (3 + sqrt 5) / 2, so
# N^1 carries 4a^6, 4, 4 and 4a^-6: nothing on the unit circle, one root inside.
fib = Matrix([[2, 1], [1, 1]]) ** 3
f = CMEndo.from_rows([[2, 0], [0, 2]]) @ CMEndo.from_rows(fib.rows)
rep = classify(f)
print("amplified (sufficient):", rep.amplified_sufficient, " int-amplified:", rep.int_amplified)

# The same answer from validated enclosures instead of exact counting.
chi = RatPoly(rep.char_poly)
for rb in root_balls(chi, 80):
    print(float(rb.ball.re), "+-", float(rb.ball.rad), "x", rb.multiplicity)
print(circle_profile(chi, 1))
