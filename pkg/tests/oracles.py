"""Brute-force reference implementations used only by the tests.

Nothing here shares code with the package beyond the ``Graph`` container.
"""

from __future__ import annotations

import itertools
import math

import networkx as nx

from circalt.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def edge_set(g: Graph) -> set[frozenset]:
    return {frozenset(e) for e in g.edges()}


def brute_cycle_length(g: Graph, order) -> int:
    """Longest monotonic cycle by checking every vertex subset."""
    E = edge_set(g)
    best = 1
    for m in range(2, g.n + 1):
        for sub in itertools.combinations(range(g.n), m):
            vs = [order[p] for p in sub]
            if all(frozenset((vs[i], vs[i + 1])) in E for i in range(m - 1)) and frozenset((vs[-1], vs[0])) in E:
                best = m
                break
    return best


def brute_altitude(g: Graph) -> int:
    """Minimum over all n! orderings (no anchoring)."""
    return min(brute_cycle_length(g, p) for p in itertools.permutations(range(g.n)))


def brute_clique_number(g: Graph) -> int:
    E = edge_set(g)
    for k in range(g.n, 0, -1):
        for sub in itertools.combinations(range(g.n), k):
            if all(frozenset(p) in E for p in itertools.combinations(sub, 2)):
                return k
    return 0


def brute_homs(g: Graph, h: Graph):
    EH = edge_set(h)
    for f in itertools.product(range(h.n), repeat=g.n):
        if all(frozenset((f[u], f[v])) in EH for u, v in g.edges()):
            yield f


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    target = edge_set(h)
    return any({frozenset((p[u], p[v])) for u, v in g.edges()} == target for p in itertools.permutations(range(g.n)))


def brute_cut_vertices(g: Graph) -> set[int]:
    G = to_nx(g)
    base = nx.number_connected_components(G)
    out = set()
    for v in range(g.n):
        H = G.copy()
        H.remove_node(v)
        if H.number_of_nodes() and nx.number_connected_components(H) > base:
            out.add(v)
    return out


def nx_girth(g: Graph) -> float:
    return nx.girth(to_nx(g))


def brute_circular_chromatic(g: Graph):
    from fractions import Fraction

    best = None
    for p in range(2, g.n + 1):
        for q in range(1, p // 2 + 1):
            if math.gcd(p, q) != 1:
                continue
            if any(all(q <= abs(f[u] - f[v]) <= p - q for u, v in g.edges()) for f in itertools.product(range(p), repeat=g.n)):
                r = Fraction(p, q)
                if best is None or r < best:
                    best = r
    return best
