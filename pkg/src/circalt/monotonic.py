"""Vertex orderings and the longest monotonic cycle they admit.

A monotonic cycle for an ordering is a sequence of distinct vertices whose
positions strictly increase, with consecutive vertices adjacent and the last
adjacent to the first.  A single vertex counts as length 1 and a single edge
as length 2.  ``max_monotonic_cycle`` returns the longest one.

The kernels work on *position adjacency*: the graph relabelled so that the
vertex at position ``k`` becomes vertex ``k``.  An increasing sequence of
positions is then an increasing sequence of bit indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .graph import Graph, iter_bits

__all__ = [
    "CircularOrdering",
    "MonotonicCycleWitness",
    "position_adjacency",
    "cycle_length",
    "max_monotonic_cycle",
    "ordering_value",
    "enumerate_monotonic_cycles",
    "is_monotonic_cycle",
]

MAX_ENUMERATION_N = 16


@dataclass(frozen=True)
class CircularOrdering:
    """A linear ordering of ``0..n-1``; ``seq[k]`` is the vertex at position ``k``.

    Rotations of the sequence give the same longest monotonic cycle length,
    so any ordering can be read circularly.  :meth:`anchored` rotates a
    chosen vertex to the front.
    """

    seq: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.seq) != list(range(len(self.seq))):
            raise ValueError(f"not a permutation of 0..{len(self.seq) - 1}: {self.seq}")

    @classmethod
    def of(cls, seq: Sequence[int]) -> CircularOrdering:
        return seq if isinstance(seq, CircularOrdering) else cls(tuple(seq))

    @classmethod
    def identity(cls, n: int) -> CircularOrdering:
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.seq)

    @property
    def position(self) -> tuple[int, ...]:
        pos = [0] * len(self.seq)
        for k, v in enumerate(self.seq):
            pos[v] = k
        return tuple(pos)

    def rotate(self, k: int) -> CircularOrdering:
        """Move the first ``k`` vertices to the end."""
        k %= max(len(self.seq), 1)
        return CircularOrdering(self.seq[k:] + self.seq[:k])

    def anchored(self, anchor: int = 0) -> CircularOrdering:
        return self.rotate(self.seq.index(anchor))

    def reversed(self) -> CircularOrdering:
        """The opposite circular direction, keeping the first vertex in front."""
        return CircularOrdering(self.seq[:1] + self.seq[:0:-1])

    def __len__(self) -> int:
        return len(self.seq)

    def __iter__(self):
        return iter(self.seq)


@dataclass(frozen=True)
class MonotonicCycleWitness:
    length: int
    vertices: tuple[int, ...]


def position_adjacency(g: Graph, seq: Sequence[int]) -> list[int]:
    """Adjacency rows of ``g`` relabelled by position in ``seq``."""
    pos = [0] * g.n
    for k, v in enumerate(seq):
        pos[v] = k
    rows = []
    for v in seq:
        row = 0
        for u in iter_bits(g.adj[v]):
            row |= 1 << pos[u]
        rows.append(row)
    return rows


def cycle_length(padj: Sequence[int], stop_at: int | None = None) -> int:
    """Longest monotonic cycle length for position adjacency ``padj``.

    With ``stop_at`` the scan returns as soon as a cycle of at least that
    length is seen, so the result is exact only when it is below ``stop_at``.
    """
    n = len(padj)
    if stop_at is None:
        stop_at = n + 1
    best = 1
    for s in range(n):
        if n - s <= best:
            break
        closers = padj[s] >> (s + 1) << (s + 1)
        if not closers:
            continue
        if best < 2:
            best = 2
            if best >= stop_at:
                return best
        last = closers.bit_length() - 1
        if last - s + 1 <= best:
            continue
        # length[v]: vertices on the longest increasing path s -> v
        length = [0] * (last + 1)
        length[s] = 1
        reach = 1 << s
        for v in range(s + 1, last + 1):
            preds = padj[v] & reach
            if not preds:
                continue
            m = 0
            while preds:
                low = preds & -preds
                lv = length[low.bit_length() - 1]
                if lv > m:
                    m = lv
                preds ^= low
            m += 1
            length[v] = m
            reach |= 1 << v
            if m > best and closers >> v & 1:
                best = m
                if best >= stop_at:
                    return best
    return best


def ordering_value(g: Graph, ordering: Sequence[int], stop_at: int | None = None) -> int:
    """Longest monotonic cycle length of ``g`` under ``ordering`` (no witness)."""
    seq = CircularOrdering.of(ordering).seq
    if len(seq) != g.n:
        raise ValueError(f"ordering has {len(seq)} entries, graph has {g.n} vertices")
    return cycle_length(position_adjacency(g, seq), stop_at)


def _suffix_lengths(padj: Sequence[int], s: int) -> list[int]:
    """``f[v]`` = vertices on the longest increasing path from ``v`` that ends
    adjacent to ``s``, over positions greater than ``s``; 0 if there is none."""
    n = len(padj)
    closers = padj[s] >> (s + 1) << (s + 1)
    f = [0] * n
    for v in range(n - 1, s, -1):
        best = 1 if closers >> v & 1 else 0
        for w in iter_bits(padj[v] >> (v + 1)):
            fw = f[v + 1 + w]
            if fw and fw + 1 > best:
                best = fw + 1
        f[v] = best
    return f


def max_monotonic_cycle(g: Graph, ordering: Sequence[int]) -> MonotonicCycleWitness:
    """Longest monotonic cycle of ``g`` under ``ordering``.

    Among cycles of maximum length the one with the lexicographically
    smallest position sequence is returned.
    """
    order = CircularOrdering.of(ordering)
    if order.n != g.n:
        raise ValueError(f"ordering has {order.n} entries, graph has {g.n} vertices")
    seq = order.seq
    padj = position_adjacency(g, seq)
    best = cycle_length(padj)
    if best == 1:
        return MonotonicCycleWitness(1, (seq[0],))
    for s in range(g.n):
        f = _suffix_lengths(padj, s)
        succ = padj[s] >> (s + 1) << (s + 1)
        if max((f[u] for u in iter_bits(succ)), default=0) + 1 != best:
            continue
        positions = [s]
        cur = s
        need = best - 1
        while need:
            cur = next(u for u in iter_bits(padj[cur] >> (cur + 1) << (cur + 1)) if f[u] == need)
            positions.append(cur)
            need -= 1
        return MonotonicCycleWitness(best, tuple(seq[p] for p in positions))
    raise AssertionError("no start vertex reproduces the cycle length")


def is_monotonic_cycle(g: Graph, ordering: Sequence[int], vertices: Sequence[int]) -> bool:
    """Check the monotonic-cycle conditions for ``vertices`` directly."""
    pos = CircularOrdering.of(ordering).position
    m = len(vertices)
    if m == 0 or len(set(vertices)) != m:
        return False
    if any(pos[vertices[t]] >= pos[vertices[t + 1]] for t in range(m - 1)):
        return False
    if m == 1:
        return True
    if any(not g.has_edge(vertices[t], vertices[t + 1]) for t in range(m - 1)):
        return False
    return g.has_edge(vertices[-1], vertices[0])


def enumerate_monotonic_cycles(
    g: Graph, ordering: Sequence[int], min_len: int = 1
) -> list[MonotonicCycleWitness]:
    """Every monotonic cycle of length ``>= min_len``, by subset enumeration.

    Each vertex subset, read in ordering order, is one candidate; exponential
    in ``n``, so limited to small graphs.  Used as a reference for
    :func:`max_monotonic_cycle`.
    """
    if g.n > MAX_ENUMERATION_N:
        raise ValueError(f"enumeration limited to n <= {MAX_ENUMERATION_N}, got {g.n}")
    seq = CircularOrdering.of(ordering).seq
    out = []
    for m in range(max(min_len, 1), g.n + 1):
        for positions in combinations(range(g.n), m):
            verts = tuple(seq[p] for p in positions)
            if m == 1:
                out.append(MonotonicCycleWitness(1, verts))
                continue
            if all(g.has_edge(verts[t], verts[t + 1]) for t in range(m - 1)) and g.has_edge(
                verts[-1], verts[0]
            ):
                out.append(MonotonicCycleWitness(m, verts))
    return out
