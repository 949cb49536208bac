"""
Certificates of non-existence
=============================

When a (g, f)-factor is missing, some disjoint pair (S, T) has negative
deficiency. On small graphs the pair can be found by enumerating all 3^n
assignments, and the matching reduction gives the same verdict.
"""

from factor_forge import DegreeBounds, Graph, criterion_exhaustive, cycle_graph, gf_factor

C5 = cycle_graph(5)
w = criterion_exhaustive(C5, DegreeBounds.uniform(5, 1, 1))
print("C5, perfect matching:", w)

###############################################################################
# Two triangles joined at a cut vertex: every vertex wants degree 1 or 2,
# except the cut vertex, which must take degree 4.

G = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
b = DegreeBounds([1, 1, 4, 1, 1], [2, 2, 4, 2, 2])
print("bow tie, cut vertex degree 4:", criterion_exhaustive(G, b), gf_factor(G, b))

b = DegreeBounds([1, 1, 3, 1, 1], [1, 1, 3, 1, 1])
w = criterion_exhaustive(G, b)
print("bow tie, degrees (1,1,3,1,1):")
print("  S =", sorted(w.S), "T =", sorted(w.T), "value =", w.value)
print("  factor from the gadget:", gf_factor(G, b))
