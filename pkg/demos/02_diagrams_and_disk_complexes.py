"""Heegaard diagrams, disk-bounding tests, and the capped disk complex.

A diagram is a surface with a red and a blue cut system.  A curve bounds a
disk in a side's handlebody exactly when its word of signed crossings with
that side's meridians reduces to nothing, and the disk complex records which
disk boundaries meet in at most one point.
"""

from heegaard_lab.disk_complex import (
    build_gamma,
    classify,
    components,
    emit_graph,
    find_destab_edge,
    isolated_vertices,
    quotient_by_symmetry,
)
from heegaard_lab.handlebody import (
    boundary_word,
    bounds_disk,
    lens_space,
    s2_x_s1,
    s3_genus1,
    standard_diagram,
)
from heegaard_lab.surface import CurveClass

# --- words and the disk test -------------------------------------------------

s3 = s3_genus1()
for p, q in [(1, 0), (0, 1), (1, 3)]:
    c = CurveClass.from_slope(p, q)
    w = boundary_word(c, s3.red)
    print(f"({p},{q}) against the red meridian: word {w}, "
          f"bounds red disk: {bounds_disk(c, 'red', s3)}")

# --- the genus-1 classification table ---------------------------------------

print("\nclassification at cap 12:")
for name, diagram in [("S^3", s3), ("L(2,1)", lens_space(2, 1)),
                      ("L(5,1)", lens_space(5, 1)), ("S^2 x S^1", s2_x_s1())]:
    print(f"  {name:10s} {classify(diagram, 12).summary()}")

# --- the disk complex and the side-swap quotient ------------------------------

gamma = build_gamma(s3, 12)
print(f"\nGamma(S^3) at cap 12: vertices {gamma.vertex_keys()}, "
      f"edges {dict(gamma.edges)}")
print(f"components: {components(gamma)}, isolated: {isolated_vertices(gamma)}")
print(f"destabilizing edge: {find_destab_edge(gamma, components(gamma)[0])}")

# S^3 has an ambient isotopy swapping the sides of its genus-1 splitting;
# declaring it collapses the complex to one vertex with a self-loop.
k10 = CurveClass.from_slope(1, 0).coords
k01 = CurveClass.from_slope(0, 1).coords
quotient = quotient_by_symmetry(gamma, [{k10: k01, k01: k10}])
print(f"after the slope swap: {len(quotient.classes)} vertex, "
      f"edges {dict(quotient.edges)}")
print()
print(emit_graph(quotient, "dot").decode())

# --- genus 2 ------------------------------------------------------------------

d2 = standard_diagram(2)
g2 = build_gamma(d2, 4)
print(f"standard genus-2 diagram, cap 4: {len(g2.classes)} vertices, "
      f"{len(g2.edges)} edges")
commutator = CurveClass(2, (2, 2, 2, 0, 2, 2, 4, 2, 2))
print(f"commutator-word curve: {boundary_word(commutator, d2.red).reduced()} "
      f"-> bounds no red disk: {not bounds_disk(commutator, 'red', d2)}")
