"""Simple undirected graphs on dense vertex sets 0..n-1.

Adjacency is stored as one integer bitmask per vertex: bit ``j`` of
``adj[i]`` is set when ``i`` and ``j`` are adjacent.  Graphs are immutable;
every operation returns a new :class:`Graph`.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "BlockDecomposition",
    "iter_bits",
    "complete",
    "cycle",
    "path",
    "complete_bipartite",
    "empty",
    "disjoint_union",
    "components",
    "is_connected",
    "blocks",
    "girth",
    "cartesian_product",
    "product_vertex",
]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph.

    ``labels`` is cosmetic and takes no part in equality or hashing.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {i} has bits outside 0..{self.n - 1}")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in iter_bits(row):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must have one entry per vertex")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
    ) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop edge ({u}, {u}) not allowed in a simple graph")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), None if labels is None else tuple(labels))

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``, sorted."""
        out = []
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def add_edge(self, u: int, v: int) -> Graph:
        return Graph.from_edges(self.n, self.edges() + [(u, v)], self.labels)

    def remove_edge(self, u: int, v: int) -> Graph:
        a, b = min(u, v), max(u, v)
        return Graph.from_edges(self.n, [e for e in self.edges() if e != (a, b)], self.labels)

    def induced(self, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph on ``vertices``, re-indexed densely.

        Returns the subgraph and the index map: ``index_map[k]`` is the
        original vertex that became vertex ``k``.
        """
        index_map = tuple(sorted(set(vertices)))
        if not index_map:
            raise ValueError("induced subgraph needs at least one vertex")
        where = {v: k for k, v in enumerate(index_map)}
        rows = []
        for v in index_map:
            row = 0
            for u in iter_bits(self.adj[v]):
                k = where.get(u)
                if k is not None:
                    row |= 1 << k
            rows.append(row)
        labels = None if self.labels is None else tuple(self.labels[v] for v in index_map)
        return Graph(len(index_map), tuple(rows), labels), index_map

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("relabelling must be a permutation of the vertices")
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def complement(self) -> Graph:
        full = self.vertex_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(self.adj)))

    def label(self, v: int) -> str:
        return str(v) if self.labels is None else self.labels[v]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal nonseparable subgraphs) and cut-vertices of a graph.

    ``blocks[k]`` is a sorted vertex tuple and ``block_edges[k]`` lists the
    edges of that block.  Isolated vertices are single-vertex blocks with no
    edges.
    """

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]
    block_edges: tuple[tuple[tuple[int, int], ...], ...]

    def blocks_at(self, v: int) -> list[int]:
        return [k for k, b in enumerate(self.blocks) if v in b]


# ---------------------------------------------------------------------------
# generators


def empty(n: int) -> Graph:
    if n < 1:
        raise ValueError("empty graph needs n >= 1")
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << i) for i in range(n)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("complete bipartite graph needs both sides >= 1")
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


# ---------------------------------------------------------------------------
# connectivity


def components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components, sorted by smallest member."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(tuple(iter_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def blocks(g: Graph) -> BlockDecomposition:
    """Blocks and cut-vertices by the lowpoint depth-first method.

    Iterative, linear in ``n + |E|``.  Edges are pushed on a stack as they
    are explored; when a child ``w`` of ``v`` has ``low[w] >= disc[v]`` the
    edges above ``(v, w)`` form one block and ``v`` separates it (unless
    ``v`` is a root with a single child).
    """
    n = g.n
    nbrs = [g.neighbors(v) for v in range(n)]
    disc = [-1] * n
    low = [0] * n
    cut: set[int] = set()
    found: list[list[tuple[int, int]]] = []
    counter = 0

    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = counter
        counter += 1
        if not nbrs[root]:
            found.append([])
            found[-1].append((root, root))  # marker for an isolated vertex
            continue
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(nbrs[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(nbrs[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if stack[-1][1] == -1:
                    root_children += 1
                else:
                    cut.add(parent)
                comp = []
                while True:
                    e = edge_stack.pop()
                    comp.append(e)
                    if e == (parent, v):
                        break
                found.append(comp)
        if root_children > 1:
            cut.add(root)

    entries = []
    for comp in found:
        if len(comp) == 1 and comp[0][0] == comp[0][1]:
            entries.append(((comp[0][0],), ()))
            continue
        edges = tuple(sorted((min(u, v), max(u, v)) for u, v in comp))
        verts = tuple(sorted({x for e in edges for x in e}))
        entries.append((verts, edges))
    entries.sort()
    return BlockDecomposition(
        blocks=tuple(e[0] for e in entries),
        cut_vertices=frozenset(cut),
        block_edges=tuple(e[1] for e in entries),
    )


def girth(g: Graph) -> float | int:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best: float | int = math.inf
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for w in iter_bits(g.adj[v]):
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif w != parent[v]:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """The Cartesian product with vertex ``(a, b)`` stored at ``a * h.n + b``.

    ``(a, b) ~ (c, d)`` iff ``a == c`` and ``bd`` is an edge of ``h``, or
    ``b == d`` and ``ac`` is an edge of ``g``.
    """
    m = h.n
    edges = []
    for a in range(g.n):
        for b, d in h.edges():
            edges.append((a * m + b, a * m + d))
    for a, c in g.edges():
        for b in range(m):
            edges.append((a * m + b, c * m + b))
    labels = None
    if g.labels is not None or h.labels is not None:
        labels = [f"({g.label(a)},{h.label(b)})" for a in range(g.n) for b in range(m)]
    return Graph.from_edges(g.n * m, edges, labels)


def product_vertex(index: int, h: Graph) -> tuple[int, int]:
    """Split a product vertex index into ``(g_index, h_index)``."""
    return divmod(index, h.n)
