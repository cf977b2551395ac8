"""How one ordering of the 5-cycle can be good or bad.

A monotonic cycle visits vertices in increasing position around the
ordering and closes back to its first vertex.  Walking the 5-cycle in its
natural order yields the whole cycle; interleaving the vertices breaks
every long cycle, leaving only edges.
"""

from circalt import enumerate_monotonic_cycles, max_monotonic_cycle
from circalt.graph import cycle

g = cycle(5)

for seq in [(0, 1, 2, 3, 4), (0, 2, 4, 1, 3)]:
    best = max_monotonic_cycle(g, seq)
    print(f"ordering {seq}: longest monotonic cycle {best.length}, e.g. {best.vertices}")
    lengths = sorted({c.length for c in enumerate_monotonic_cycles(g, seq)})
    print(f"  lengths that occur: {lengths}")
