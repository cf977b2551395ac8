"""Clique number, homomorphisms, cores and the circular chromatic number.

Everything here is exact and exhaustive, sized for graphs of a dozen or so
vertices.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import NamedTuple, Sequence

from .graph import Graph, complete, iter_bits

__all__ = [
    "max_clique",
    "clique_number",
    "is_homomorphism",
    "hom_exists",
    "endomorphisms",
    "core_of",
    "is_core",
    "is_isomorphic",
    "chromatic_number",
    "circular_clique",
    "CircularChromatic",
    "circular_chromatic",
]


# ---------------------------------------------------------------------------
# cliques


def max_clique(g: Graph) -> tuple[int, ...]:
    """A maximum clique, by branch and bound with a greedy colouring bound."""
    adj = g.adj
    best: list[int] = []

    def colour_bound(cand: int) -> list[tuple[int, int]]:
        # greedy sequential colouring; returns (vertex, colour) in colour order
        out = []
        colour = 0
        uncoloured = cand
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~adj[v] & ~low
                uncoloured &= ~low
                out.append((v, colour))
        return out

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        ordered = colour_bound(cand)
        for v, colour in reversed(ordered):
            if len(clique) + colour <= len(best):
                return
            clique.append(v)
            nxt = cand & adj[v]
            if nxt:
                expand(clique, nxt)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    expand([], g.vertex_mask)
    return tuple(sorted(best))


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


# ---------------------------------------------------------------------------
# homomorphisms


def is_homomorphism(g: Graph, h: Graph, mapping: Sequence[int]) -> bool:
    if len(mapping) != g.n or any(not 0 <= x < h.n for x in mapping):
        return False
    return all(h.has_edge(mapping[u], mapping[v]) for u, v in g.edges())


def _hom_search(g: Graph, h: Graph, domains: list[int]):
    """Yield homomorphisms ``g -> h`` with ``mapping[v]`` drawn from ``domains[v]``.

    Backtracking with forward checking; the next vertex is the unassigned one
    with the smallest remaining domain, ties broken by degree.
    """
    n = g.n
    gadj = g.adj
    hadj = h.adj
    mapping = [-1] * n
    degree = g.degrees()

    def pick(unassigned: int, doms: list[int]) -> int:
        best_v, best_key = -1, None
        for v in iter_bits(unassigned):
            key = (doms[v].bit_count(), -degree[v])
            if best_key is None or key < best_key:
                best_v, best_key = v, key
        return best_v

    def search(unassigned: int, doms: list[int]):
        if not unassigned:
            yield tuple(mapping)
            return
        v = pick(unassigned, doms)
        rest = unassigned & ~(1 << v)
        nbrs = gadj[v] & rest
        for c in iter_bits(doms[v]):
            allowed = hadj[c]
            new = doms
            ok = True
            if nbrs:
                new = list(doms)
                for w in iter_bits(nbrs):
                    d = new[w] & allowed
                    if not d:
                        ok = False
                        break
                    new[w] = d
            if ok:
                mapping[v] = c
                yield from search(rest, new)
        mapping[v] = -1

    if any(d == 0 for d in domains):
        return
    yield from search(g.vertex_mask, list(domains))


def hom_exists(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """A homomorphism ``g -> h`` as a vertex map, or ``None`` if there is none.

    The search is complete: ``None`` means no homomorphism exists.
    """
    if g.num_edges and not h.num_edges:
        return None
    return next(_hom_search(g, h, [h.vertex_mask] * g.n), None)


def endomorphisms(g: Graph):
    """Iterate over every homomorphism from ``g`` to itself."""
    return _hom_search(g, g, [g.vertex_mask] * g.n)


def core_of(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """A core of ``g`` as an induced subgraph, with its vertex map into ``g``.

    Repeatedly looks for an endomorphism missing some vertex ``v`` (a
    homomorphism into ``g - v``) and drops ``v``; when no vertex can be
    dropped every endomorphism is onto, so the remaining graph is a core.
    """
    current = g
    index_map = tuple(range(g.n))
    changed = True
    while changed and current.n > 1:
        changed = False
        for v in range(current.n):
            domains = [current.vertex_mask & ~(1 << v)] * current.n
            f = next(_hom_search(current, current, domains), None)
            if f is None:
                continue
            image = set(f)
            current, sub_map = current.induced(image)
            index_map = tuple(index_map[k] for k in sub_map)
            changed = True
            break
    return current, index_map


def is_core(g: Graph) -> bool:
    """True when every endomorphism of ``g`` is a bijection (exhaustive)."""
    return all(len(set(f)) == g.n for f in endomorphisms(g))


def is_isomorphic(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """An isomorphism ``g -> h`` as a vertex map, or ``None``.

    Backtracking over vertex images, restricted to equal degrees and checked
    edge by edge against already-mapped vertices.
    """
    if g.n != h.n or g.num_edges != h.num_edges:
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    n = g.n
    hdeg = h.degrees()
    gdeg = g.degrees()
    by_degree: dict[int, int] = {}
    for v in range(n):
        by_degree[hdeg[v]] = by_degree.get(hdeg[v], 0) | (1 << v)
    order = sorted(range(n), key=lambda v: -gdeg[v])
    mapping = [-1] * n
    used = 0

    def place(k: int) -> bool:
        nonlocal used
        if k == n:
            return True
        v = order[k]
        cand = by_degree[gdeg[v]] & ~used
        for c in iter_bits(cand):
            ok = True
            for u in order[:k]:
                if g.has_edge(u, v) != h.has_edge(mapping[u], c):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = c
            used |= 1 << c
            if place(k + 1):
                return True
            used &= ~(1 << c)
        mapping[v] = -1
        return False

    return tuple(mapping) if place(0) else None


def chromatic_number(g: Graph) -> int:
    k = 1
    while hom_exists(g, complete(k)) is None:
        k += 1
    return k


# ---------------------------------------------------------------------------
# circular colourings


def circular_clique(p: int, q: int) -> Graph:
    """``K_{p/q}``: vertices ``0..p-1``, ``i ~ j`` iff ``q <= |i - j| <= p - q``."""
    if q < 1 or p < 2 * q:
        raise ValueError(f"circular clique needs p >= 2q >= 2, got p={p}, q={q}")
    if gcd(p, q) != 1:
        raise ValueError(f"p/q must be in lowest terms, got {p}/{q}")
    edges = [(i, j) for i in range(p) for j in range(i + 1, p) if q <= j - i <= p - q]
    return Graph.from_edges(p, edges)


class CircularChromatic(NamedTuple):
    value: Fraction
    p: int
    q: int
    colouring: tuple[int, ...]


def circular_chromatic(g: Graph) -> CircularChromatic:
    """Circular chromatic number: least ``p/q`` with ``p <= n`` such that ``g -> K_{p/q}``.

    Candidates are tried in increasing order; the colouring is the witnessing
    homomorphism into ``K_{p/q}``.
    """
    if not g.num_edges:
        raise ValueError("circular chromatic number is not defined here for edgeless graphs")
    candidates = sorted(
        Fraction(p, q)
        for p in range(2, g.n + 1)
        for q in range(1, p // 2 + 1)
        if gcd(p, q) == 1
    )
    for r in candidates:
        f = hom_exists(g, circular_clique(r.numerator, r.denominator))
        if f is not None:
            return CircularChromatic(r, r.numerator, r.denominator, f)
    raise AssertionError("no circular clique with p <= n admits a homomorphism")

