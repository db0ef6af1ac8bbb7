"""Polynomial arithmetic over a prime field, step by step.

Builds a small ring, does some arithmetic, then walks through multivariate
division (normal forms), S-polynomials, and interreduction — the raw
ingredients every basis engine in this package is made of.
"""

from midgb import PolyRing, interreduce, normal_form, s_polynomial

ring = PolyRing(7, ["x", "y"], "grevlex")
x, y = ring.variable(0), ring.variable(1)

f = ring.poly({(2, 1): 1, (1, 0): 3, (0, 0): 1})  # x^2*y + 3x + 1
g = x * y - y
print("f =", f)
print("g =", g)
print("f * g =", f * g)
print("f + g =", f + g)
print("5 * f =", f.scale(5))

print()
print("normal form of f modulo [g]:", normal_form(f, [g]))
print("  (x^2*y reduces via x*y -> y, twice, leaving a remainder")
print("   none of whose terms is divisible by x*y)")

print()
s = s_polynomial(f, g)
print("S-polynomial of f and g:", s)
print("  cancels the leading terms of both inputs against their lcm")

print()
basis = [x + y, x, y * y + x]
print("interreduce", [str(p) for p in basis])
print("  ->", [str(p) for p in interreduce(basis)])
print("  each member is monic and irreducible by the others")
