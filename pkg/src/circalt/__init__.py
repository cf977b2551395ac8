"""Exact circular altitude of small graphs, with property checks."""

from .altitude import (
    AltitudeResult,
    BudgetExceeded,
    altitude,
    altitude_bb,
    altitude_oracle,
    certify,
)
from .formats import GraphFormatError, encode_graph6, parse_dimacs, parse_edge_list, parse_graph6
from .graph import (
    BlockDecomposition,
    Graph,
    blocks,
    cartesian_product,
    complete,
    complete_bipartite,
    components,
    cycle,
    disjoint_union,
    empty,
    girth,
    path,
)
from .homcore import (
    circular_chromatic,
    circular_clique,
    clique_number,
    core_of,
    hom_exists,
    is_isomorphic,
)
from .monotonic import (
    CircularOrdering,
    MonotonicCycleWitness,
    enumerate_monotonic_cycles,
    max_monotonic_cycle,
    ordering_value,
)

__version__ = "0.1.0"
