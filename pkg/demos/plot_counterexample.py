"""
A regular graph with many allowed degrees and no factor
=======================================================

For even r the two-hub graph G* is r-regular on r(r+1)+2 vertices. The
allowed set H* keeps every odd degree except the three values around r/2,
yet no spanning subgraph has all of its degrees in H*.
"""

from factor_forge import gstar, hstar
from factor_forge.counterexample import forced_degree_demo, positive_controls, verify_gstar_infeasible

r = 6
layout = gstar(r)
G = layout.graph
print(f"G*({r}): {G.n} vertices, {G.m} edges, hubs u={layout.u} v={layout.v}")
print("H* =", sorted(hstar(r)))

# The exhaustive search branches on the hub edges first and uses the fact
# that each copy wired only to u must send it an odd number of chosen edges.
report = verify_gstar_infeasible(r)
for line in report.lines():
    print("  " + line)

###############################################################################
# Relax the spec to every odd degree. A factor now exists, and u always
# ends up with degree r/2 = 3, which is exactly what H* leaves out.

for seed in range(3):
    F, forced = forced_degree_demo(r, seed=seed)
    print(" ".join(forced.lines()))

###############################################################################
# Sanity check: G* is not simply factor-free.

controls = positive_controls(r)
print("positive controls:", ", ".join(sorted(controls)))
