"""Altitude is decided block by block.

Two triangles glued at one vertex (the bowtie) have altitude 3, the same
as one triangle.  Gluing a 5-cycle onto a triangle gives the larger of 2
and 3.  The block driver splits the graph at its cut-vertices, solves
each block, then stitches one ordering for the whole graph.
"""

from circalt import altitude
from circalt.graph import Graph, blocks
from circalt.monotonic import ordering_value

bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
kite = Graph.from_edges(7, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 2)])

for name, g in [("bowtie", bowtie), ("triangle + 5-cycle", kite)]:
    dec = blocks(g)
    r = altitude(g)
    print(f"{name}: cut vertices {sorted(dec.cut_vertices)}")
    for b in r.per_block:
        print(f"  block {b.vertices}: {b.value}")
    print(f"  whole graph: {r.value}, stitched ordering {r.witness.seq} "
          f"evaluates to {ordering_value(g, r.witness.seq)}")
