"""Jet ideals from Hasse-Schmidt derivations; arcs and contact orders.

Run:  python demos/02_jets_and_arcs.py
"""

from arcspace.jets import (
    AffineScheme,
    Arc,
    eval_along_arc,
    hs_derivative,
    jacobian_ideal,
    jet_ideal,
    ord_along_arc,
    truncate_arc,
)
from arcspace.polyalg import VarSet, parse_poly

vs = VarSet(["x0", "x1", "x2", "x3"])
X = AffineScheme(vs, (parse_poly("x0*x3 + x1*x2", vs),))
print("X = V(x0*x3 + x1*x2) in A^4, a 3-fold with an isolated singular point")

print()
print("=== Hasse-Schmidt derivatives of the defining equation ===")
g = X.generators[0]
for p in range(3):
    print(f"  D_{p}(g) =", hs_derivative(g, p))
print("These cut out the jet schemes: level n uses D_0 .. D_n.")

print()
print("=== jet ideal at level 2 ===")
for q in jet_ideal(X, 2):
    print("  ", q)

print()
print("=== arcs and contact orders ===")
for m in (1, 2, 3):
    arc = Arc.from_strings(vs, [f"t^{m}", "0", "0", "0"])
    jac = jacobian_ideal(X)
    print(f"  arc (t^{m},0,0,0): ord along Jacobian ideal {[str(p) for p in jac]} "
          f"= {ord_along_arc(jac, arc)}")

print()
print("=== evaluation along an arc that lives on X ===")
arc = Arc.from_strings(vs, ["t", "t^2", "-t^3", "t^4"])
print("  g(alpha(t)) =", eval_along_arc(g, arc))
print("  (t*t^4 + t^2*(-t^3) = 0: the arc satisfies the equation)")

print()
print("=== truncating an arc to a jet-space point ===")
jp = truncate_arc(Arc.from_strings(vs, ["t^2", "0", "0", "0"]), 2)
print("  nonzero jet coordinates:",
      {v.name: str(x) for v, x in zip(jp.varset, jp.values) if x})
