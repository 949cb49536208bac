"""
Building an H-factor stage by stage
===================================

An {r, r+1}-graph has an H-factor as soon as every |H(v)| reaches
(MH - mH + 3)/2. The construction peels a {M, M+1}-factor, splits it, orients
the leftover part and finishes with a small exact search.
"""

from factor_forge import DegreeSpec, main_condition, petersen_graph
from factor_forge.suites import random_main_instance
from factor_forge.theorems import main_h_factor

G = petersen_graph()
spec = DegreeSpec.uniform(G.n, {1, 2})
print("condition holds:", main_condition(G, spec))
F, trace = main_h_factor(G, spec)
for line in trace.lines():
    print(line)

###############################################################################
# A random instance with gaps in H. The trace shows every intermediate
# factor; the orientation line is what makes the shifted spec solvable.

G, spec = random_main_instance(8, seed=12)
F, trace = main_h_factor(G, spec)
print()
print("H:", [sorted(a) for a in spec.allowed])
for line in trace.lines():
    print(line)
print("final degrees all allowed:", spec.admits(F.degrees))
