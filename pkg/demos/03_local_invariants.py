"""Embedding dimension, tangent cones, and embedding codimension.

The embedding codimension of a local ring measures how far the tangent cone
sits inside the tangent space; it vanishes exactly at (formally) smooth
points.  At a rational point of a finite-type scheme it is computed two ways
at once: ambient count minus Jacobian rank minus tangent-cone dimension, and
the height of the initial ideal minus the Jacobian rank.

Run:  python demos/03_local_invariants.py
"""

from arcspace.jets import AffineScheme, Arc
from arcspace.localgeom import ecodim_at_point, ecodim_jet, ecodim_window
from arcspace.polyalg import VarSet, parse_poly

plane = VarSet(["x", "y"])

print("=== points of plane curves ===")
for label, text, point in [
    ("smooth point of a parabola", "y - x^2", [0, 0]),
    ("node at the origin", "x*y", [0, 0]),
]:
    a = ecodim_at_point([parse_poly(text, plane)], point)
    print(f"  {label}: edim {a.edim}, tangent cone dim {a.tangent_cone_dim}, "
          f"ecodim {a.ecodim}")

print()
print("=== the quadric cone in A^4 ===")
vs = VarSet(["x0", "x1", "x2", "x3"])
X = AffineScheme(vs, (parse_poly("x0*x3 + x1*x2", vs),))
a = ecodim_at_point(list(X.generators), [0, 0, 0, 0])
print(f"  at the vertex: edim {a.edim}, dim {a.tangent_cone_dim}, ecodim {a.ecodim}")

print()
print("=== jet-space analyses along arcs ===")
print("For the arc (t^m,0,0,0) the level-n jet analyses stabilize at ecodim m")
print("once n reaches twice the contact order:")
for m in (1, 2):
    arc = Arc.from_strings(vs, [f"t^{m}", "0", "0", "0"])
    w = ecodim_window(X, arc, 2 * m, 2 * m + 2)
    print(f"  m = {m}: levels {dict((n, lv.ecodim) for n, lv in sorted(w.per_level.items()))}"
          f" stabilized = {w.stabilized}")

print()
print("=== an arc trapped in the singular locus diverges ===")
node = AffineScheme(plane, (parse_poly("x*y", plane),))
zero_arc = Arc.from_strings(plane, ["0", "0"])
values = [ecodim_jet(node, zero_arc, n).ecodim for n in range(5)]
print("  constant arc on the node, levels 0..4:", values)
print("  (no finite-dimensional model can exist for this arc)")
