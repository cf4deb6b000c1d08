"""Curves in normal coordinates, and exact intersection numbers.

Every surface in the engine carries one fixed triangulation: the fan
triangulation of the standard 4g-gon, with a single vertex.  A curve is a
vector of edge weights; the torus gets the closed-form slope calculus, and
higher genus runs the arrangement engine (overlay two curves, slide away
bigons, count what is left).
"""

from heegaard_lab import (
    CurveClass,
    Slope,
    canonical_triangulation,
    geometric_intersection,
    normalize,
    same_class,
)

# --- the torus -------------------------------------------------------------

tri = canonical_triangulation(1)
print(f"genus 1: {tri.n_edges} edges {tri.edge_names}, "
      f"{tri.n_triangles()} triangles")

# A slope (p, q) crosses edge a |q| times, edge b |p| times, and the
# diagonal |p - q| times.
for p, q in [(1, 0), (0, 1), (1, 1), (3, 1)]:
    print(f"slope ({p},{q}) has coordinates {Slope.of(p, q).coords()}")

a = CurveClass.from_slope(3, 1)
b = CurveClass.from_slope(1, 2)
print(f"i((3,1),(1,2)) = {geometric_intersection(a, b)}   (the determinant)")

# normalize() classifies raw vectors: a tripled slope vector is a multicurve.
report = normalize(1, tuple(3 * w for w in Slope.of(1, 0).coords()))
print(f"3 x (1,0) decomposes as {report.entries}")

# --- genus two -------------------------------------------------------------

tri2 = canonical_triangulation(2)
print(f"\ngenus 2: {tri2.n_edges} edges {tri2.edge_names}")

# Push the core loops of the two handles off the vertex; the two available
# sides give different vectors for the same isotopy class.
e_a1 = tri2.edge_index("a1")
side0 = CurveClass(2, tri2.edge_loop_pushoff(e_a1, 0))
side1 = CurveClass(2, tri2.edge_loop_pushoff(e_a1, 1))
print(f"a1 pushoffs: {side0.coords} and {side1.coords}")
print(f"same class?  {same_class(side0, side1)}")

b1 = CurveClass(2, tri2.edge_loop_pushoff(tri2.edge_index("b1"), 1))
print(f"i(a1, b1) = {geometric_intersection(side0, b1)}  (dual handles)")
d4 = CurveClass(2, tri2.edge_loop_pushoff(tri2.edge_index("d4"), 0))
print(f"i(a1, d4) = {geometric_intersection(side0, d4)}  (d4 separates)")
