"""Cartesian products keep the larger factor's altitude.

A triangle times an edge is a prism; its altitude is 3, the triangle's.
Reading the product in the order "first factor's ordering, each vertex
expanded by the second factor's ordering" already attains the maximum.
Factors go through the full scan; products, up to 12 vertices here, go
through the block driver.
"""

from circalt import altitude, altitude_oracle
from circalt.graph import cartesian_product, complete, cycle, path
from circalt.monotonic import ordering_value

for (gn, g), (hn, h) in [(("K3", complete(3)), ("K2", complete(2))),
                         (("C5", cycle(5)), ("K2", complete(2))),
                         (("P3", path(3)), ("C4", cycle(4)))]:
    p = cartesian_product(g, h)
    a, b = altitude_oracle(g).value, altitude_oracle(h).value
    c = altitude(p).value
    wg, wh = altitude_oracle(g).witness.seq, altitude_oracle(h).witness.seq
    lex = tuple(x * h.n + y for x in wg for y in wh)
    print(f"{gn} x {hn}: {a}, {b} -> product {c}; lexicographic ordering gives {ordering_value(p, lex)}")
