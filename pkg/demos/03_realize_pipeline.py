"""
From a branching to an exact linear complementarity instance
============================================================

Three roads lead to the same orientation: build it from the influence
graph, read it off a cyclic sign extension, or solve an exact-rational
LCP built from moment-curve vectors.  This walks one branching through
all three.
"""

from usomat import (
    Branching,
    build_matousek,
    canonicalize,
    extension_to_uso,
    synthesize_extension,
)
from usomat.matroid import containment_graph
from usomat.plcp import (
    is_p_matrix,
    plcp_to_uso,
    realization_matrix,
    solve_candidate,
    translate_to_plcp,
)

# A branching on three dimensions: 1 is the root, children 2 and 3.
b = Branching(3, {2: 1, 3: 1})
g = b.transitive_closure()
print("closure edges:", g.edges)
target = build_matousek(g)
print("orientation:", target.outmaps)

# Road two: a cyclic extension (an ordering of paired sign elements plus
# a marker q, with a flip set) realizing the same nesting structure.
ext = synthesize_extension(b)
print("\nextension order:", ext.order)
print("flip set:", sorted(ext.flipped))
print("nesting graph matches:", containment_graph(ext) == g)
print("extension orientation matches:", canonicalize(extension_to_uso(ext)) == target)

# Road three: place the elements on the moment curve.  Columns are
# sign * (1, x, x^2) at increasing abscissae; splitting the matrix and
# folding through the basis half gives M and q with exact fractions.
v = realization_matrix(ext)
print("\nmoment-curve matrix:")
print(v.to_text())
inst = translate_to_plcp(v, ext)
print("\nM =")
print(inst.M.to_text())
print("q =", " ".join(str(x) for x in inst.q))
print("P-matrix (all principal minors positive):", is_p_matrix(inst.M))

# Each cube vertex corresponds to a complementary candidate basis; the
# unique fully feasible one is the global sink, and the signs of the
# others reproduce the orientation.
for vertex in range(8):
    cand = solve_candidate(inst, vertex)
    w = " ".join(str(x) for x in cand.w)
    z = " ".join(str(x) for x in cand.z)
    print(f"vertex {vertex:03b}: w = ({w})  z = ({z})  feasible = {cand.feasible}")
print("\nLCP orientation matches:", canonicalize(plcp_to_uso(inst)) == target)
