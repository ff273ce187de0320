"""Exact polynomial algebra: parsing, bases, initial ideals, divisions.

Run:  python demos/01_polynomials_and_standard_bases.py
"""

from arcspace.polyalg import (
    ANTIGRLEX,
    GREVLEX,
    VarSet,
    groebner_basis,
    initial_ideal,
    monomial_dim,
    mora_standard_basis,
    parse_poly,
    poly_to_string,
    regularize,
    weierstrass_divide,
)
from arcspace.polyalg.orders import leading_monomial

print("=== exact rational polynomials ===")
vs = VarSet(["x", "y"])
f = parse_poly("2/3*x^2 - y + 1/6", vs)
print("f         =", f)
print("df/dx     =", f.partial("x"))
print("f*(x + y) =", f * parse_poly("x + y", vs))

print()
print("=== a reduced Groebner basis (global order) ===")
gens = [parse_poly("x^2 - y", vs), parse_poly("y^2 - x", vs)]
basis = groebner_basis(gens, GREVLEX)
for g in basis:
    print("  ", g)
lms = [leading_monomial(g, GREVLEX) for g in basis]
print("dimension of the quotient by the leading terms:", monomial_dim(lms, 2))

print()
print("=== a Mora standard basis (local order at the origin) ===")
# x - x^2 generates the same local ideal as x: the unit 1 - x is invisible
# to a global order but harmless locally
local_gens = [parse_poly("y - x^2", vs), parse_poly("x^3", vs)]
for g in mora_standard_basis(local_gens):
    print("  ", poly_to_string(g, ANTIGRLEX))
print("initial ideal:", [str(p) for p in initial_ideal(local_gens)])

print()
print("=== the S-pair matters: ini of the generators is not enough ===")
tricky = [parse_poly("x^2 - y^3", vs), parse_poly("x*y", vs)]
print("generators:    ", [str(p) for p in tricky])
print("initial ideal: ", [str(p) for p in initial_ideal(tricky)])
print("(y^4 appears: x*(x*y) - y*(x^2 - y^3) = y^4 has no counterpart")
print(" among the initial forms of the generators themselves)")

print()
print("=== truncated Weierstrass division ===")
f = parse_poly("y^2 - x", vs)
g = parse_poly("y^3", vs)
q, r = weierstrass_divide(g, f, "y", trunc=6)
print(f"dividing y^3 by y^2 - x:  q = {q},  r = {r}")
print("multiply back:", q * f + r == g)

print()
print("=== regularizing coordinate change ===")
vs3 = VarSet(["x1", "x2", "y"])
h = parse_poly("x1*x2", vs3)
sub = regularize(h, "y")
print("x1*x2 is not y-regular; substitute",
      ", ".join(f"{v} -> {v} + y^{a}" for v, a in sub.exponents))
print("transformed:", sub.apply(h))
