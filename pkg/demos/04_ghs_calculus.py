"""The symbolic GHS calculus: complexities, the eight move cases, and the
orderings that make every move a strict descent.
"""

from heegaard_lab.ghs import (
    GHS,
    CompressionDescriptor,
    Destabilization,
    WeakReduction,
    apply_move_report,
    compare_ghs,
    complexity,
    enumerate_moves,
    ghs_key,
    stabilize,
)


def nonsep(side, g):
    return CompressionDescriptor(side, g, ("nonsep",))


print("complexities: c([1]) =", complexity([1]),
      " c([3]) =", complexity([3]),
      " c([2,2]) =", complexity([2, 2]))

# Weak reduction, case 1(a): a genus-3 splitting splits into two thinner ones.
g3 = GHS.closed_splitting(3)
move = WeakReduction(1, nonsep("down", 3), nonsep("up", 3), (1,))
r = apply_move_report(g3, move)
print(f"\n{g3}  --1a-->  {r.result}")
print(f"keys: {ghs_key(g3)} -> {ghs_key(r.result)} "
      f"({compare_ghs(r.result, g3)})")

# Case 1(b) triggers the sphere rule and the thin-level merge.
g = GHS.of([[], [1], [1], [2], []])
move = WeakReduction(3, nonsep("down", 2), nonsep("up", 2), (0,))
r = apply_move_report(g, move)
print(f"\n{g}  --1b-->  {r.result}   (merged: {r.merged})")

# Destabilization, case 2(a), and its inverse.
g2 = GHS.closed_splitting(2)
r = apply_move_report(g2, Destabilization(1, 2))
print(f"\n{g2}  --2a-->  {r.result}")
print(f"stabilize back: {stabilize(r.result, 1, 1)}")

# Every valid move from a GHS, ready for the move graph.
print(f"\nmoves from {g3}:")
for m in enumerate_moves(g3):
    out = apply_move_report(g3, m)
    print(f"  {out.case}: key {ghs_key(out.result)}  via {m}")
