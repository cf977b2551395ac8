"""Homomorphically equivalent graphs share their altitude.

Every bipartite graph with an edge folds onto a single edge, so its core is
K2 and its altitude is 2.  A 5-cycle is already a core.  If G maps into H
then G's altitude is at most H's.
"""

from circalt import altitude, core_of, hom_exists
from circalt.graph import complete, complete_bipartite, cycle, disjoint_union

for name, g in [("C6", cycle(6)), ("K2,3", complete_bipartite(2, 3)), ("C5", cycle(5)),
                ("C5 + K3", disjoint_union(cycle(5), complete(3)))]:
    core, kept = core_of(g)
    print(f"{name:<8} core on vertices {kept}, altitude {altitude(g).value} = core altitude {altitude(core).value}")

f = hom_exists(cycle(7), cycle(5))
print(f"C7 -> C5 via {f}: altitudes {altitude(cycle(7)).value} <= {altitude(cycle(5)).value}")
print(f"K3 -> C5 exists: {hom_exists(complete(3), cycle(5)) is not None}")
