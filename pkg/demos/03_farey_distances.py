"""The capped curve complex of the torus is a fragment of the Farey graph.

Vertices are slopes, edges join slopes with |ps - qr| <= 1, and distances
between disk-complex edges are measured through it.
"""

from heegaard_lab.disk_complex import (
    build_lambda,
    edge_distance,
    emit_graph,
    vertex_distance,
)
from heegaard_lab.handlebody import s3_genus1
from heegaard_lab.surface import CurveClass

lam = build_lambda(s3_genus1(), 40)
print(f"Lambda(torus) at cap 40: {len(lam.classes)} vertices, "
      f"{len(lam.edges)} edges")

k10 = CurveClass.from_slope(1, 0).coords
for p, q in [(0, 1), (1, 1), (2, 1), (5, 2), (7, 3), (8, 5)]:
    k = CurveClass.from_slope(p, q).coords
    d = vertex_distance(lam, k10, k)
    print(f"  d((1,0), ({p},{q})) = {d.value}")

# Distance between edges is the smallest distance between endpoints, so
# edges sharing a vertex are at distance 0.
e1 = tuple(sorted((k10, CurveClass.from_slope(0, 1).coords)))
e2 = tuple(sorted((CurveClass.from_slope(5, 2).coords,
                   CurveClass.from_slope(2, 1).coords)))
print(f"edge distance {e1} to {e2}: {edge_distance(lam, e1, e2).value}")

# The emitted JSON is byte-stable and is what external oracles consume.
blob = emit_graph(lam)
print(f"emitted graph: {len(blob)} bytes, deterministic")
