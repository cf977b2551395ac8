"""Small-graph catalogs: every graph (or tree) on ``n`` vertices up to isomorphism.

Catalogs are built by adding one vertex, joined to every possible subset,
to each graph of the previous size and discarding isomorphic duplicates.
The counts can be checked against :func:`count_graphs`, which uses
Burnside's lemma and never builds a graph.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from math import factorial

from .formats import encode_graph6
from .graph import Graph, is_connected, iter_bits
from .homcore import is_isomorphic

__all__ = [
    "graph_catalog",
    "connected_catalog",
    "tree_catalog",
    "count_graphs",
    "count_connected",
]


def _invariant(g: Graph) -> tuple:
    deg = g.degrees()
    nbr_degrees = sorted(tuple(sorted(deg[u] for u in iter_bits(row))) for row in g.adj)
    triangles = sorted(
        sum((g.adj[u] & g.adj[v]).bit_count() for u in iter_bits(g.adj[v])) // 2 for v in range(g.n)
    )
    return (g.num_edges, tuple(sorted(deg)), tuple(nbr_degrees), tuple(triangles))


def _dedupe(candidates) -> tuple[Graph, ...]:
    buckets: dict[tuple, list[Graph]] = {}
    for h in candidates:
        bucket = buckets.setdefault(_invariant(h), [])
        if not any(is_isomorphic(h, x) is not None for x in bucket):
            bucket.append(h)
    found = [g for bucket in buckets.values() for g in bucket]
    found.sort(key=lambda g: (g.num_edges, encode_graph6(g)))
    return tuple(found)


def _add_vertex(g: Graph, mask: int) -> Graph:
    rows = [row | ((mask >> v & 1) << g.n) for v, row in enumerate(g.adj)]
    rows.append(mask)
    return Graph(g.n + 1, tuple(rows))


@lru_cache(maxsize=None)
def graph_catalog(n: int) -> tuple[Graph, ...]:
    """All graphs on ``n`` vertices, one per isomorphism class."""
    if n < 1:
        raise ValueError("catalog needs n >= 1")
    if n == 1:
        return (Graph(1, (0,)),)
    return _dedupe(_add_vertex(g, mask) for g in graph_catalog(n - 1) for mask in range(1 << (n - 1)))


def connected_catalog(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in graph_catalog(n) if is_connected(g))


@lru_cache(maxsize=None)
def tree_catalog(n: int) -> tuple[Graph, ...]:
    """All trees on ``n`` vertices, by attaching a leaf to smaller trees."""
    if n < 1:
        raise ValueError("catalog needs n >= 1")
    if n == 1:
        return (Graph(1, (0,)),)
    return _dedupe(_add_vertex(t, 1 << v) for t in tree_catalog(n - 1) for v in range(n - 1))


def count_graphs(n: int) -> int:
    """Number of graphs on ``n`` vertices up to isomorphism (Burnside)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    total = 0
    for perm in permutations(range(n)):
        seen = set()
        orbits = 0
        for p in pairs:
            if p in seen:
                continue
            orbits += 1
            q = p
            while q not in seen:
                seen.add(q)
                a, b = perm[q[0]], perm[q[1]]
                q = (min(a, b), max(a, b))
        total += 2**orbits
    return total // factorial(n)


def count_connected(n: int) -> int:
    """Connected graphs on ``n`` vertices, from the totals by the inverse Euler transform."""
    totals = [1] + [count_graphs(k) for k in range(1, n + 1)]
    connected = [0] * (n + 1)
    # totals are the Euler transform of connected; peel it off one order at a time
    for m in range(1, n + 1):
        connected[m] = 0
        acc = _euler_transform(connected, m)
        connected[m] = totals[m] - acc[m]
    return connected[n]


def _euler_transform(c: list[int], upto: int) -> list[int]:
    # b_m = (1/m) * sum_{k=1..m} (sum_{d | k} d * c_d) * b_{m-k}
    s = [0] * (upto + 1)
    for k in range(1, upto + 1):
        s[k] = sum(d * c[d] for d in range(1, k + 1) if k % d == 0 and d < len(c))
    b = [1] + [0] * upto
    for m in range(1, upto + 1):
        b[m] = sum(s[k] * b[m - k] for k in range(1, m + 1)) // m
    return b
