"""Where altitude sits between clique number and circular chromatic number.

The 5-cycle has clique number 2, altitude 2 and circular chromatic number
5/2.  The wheel on a 5-cycle pushes all three up.  Once altitude is 3 or
more it is at least the girth; in particular altitude exactly 3 forces a
triangle.
"""

from circalt import altitude, circular_chromatic, clique_number
from circalt.graph import Graph, complete, cycle, girth

wheel = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)] + [(5, v) for v in range(5)])
for name, g in [("C5", cycle(5)), ("C7", cycle(7)), ("W5", wheel), ("K4", complete(4))]:
    chi_c = circular_chromatic(g).value
    print(f"{name:<3} omega={clique_number(g)} altitude={altitude(g).value} chi_c={chi_c} girth={girth(g)}")
