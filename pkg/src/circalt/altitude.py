"""Exact circular altitude.

Three routes to the same number:

* :func:`altitude_oracle` scans every ordering that starts with vertex 0.
* :func:`altitude_bb` grows ordering prefixes depth first and discards a
  prefix once the monotonic cycles already inside it are as long as the best
  complete ordering found so far.
* :func:`altitude` splits the graph into blocks, solves each 2-connected
  block with :func:`altitude_bb` and takes the maximum.  It also stitches the
  block orderings into one ordering of the whole graph that attains it.
"""

from __future__ import annotations

import multiprocessing
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations
from typing import NamedTuple

from .graph import Graph, blocks, iter_bits
from .homcore import clique_number
from .monotonic import CircularOrdering, cycle_length, ordering_value

__all__ = [
    "ORACLE_MAX_N",
    "SearchStats",
    "BlockValue",
    "AltitudeResult",
    "BudgetExceeded",
    "altitude_oracle",
    "altitude_bb",
    "altitude",
    "assemble_block_ordering",
    "CertificateCheck",
    "CertificateReport",
    "certify",
]

ORACLE_MAX_N = 10
CERTIFY_LOWER_MAX_N = 7


@dataclass
class SearchStats:
    nodes: int = 0
    orderings: int = 0
    seconds: float = 0.0

    def add(self, other: SearchStats) -> None:
        self.nodes += other.nodes
        self.orderings += other.orderings


class BlockValue(NamedTuple):
    block: int
    vertices: tuple[int, ...]
    value: int


@dataclass
class AltitudeResult:
    value: int
    witness: CircularOrdering
    method: str
    per_block: list[BlockValue] | None = None
    stats: SearchStats = field(default_factory=SearchStats)


class BudgetExceeded(RuntimeError):
    """The node budget ran out before the search could prove optimality.

    ``lower`` and ``upper`` bracket the true value; ``ordering`` attains
    ``upper``.  ``block`` names the offending block when raised by the block
    driver.
    """

    def __init__(
        self,
        lower: int,
        upper: int,
        ordering: CircularOrdering,
        nodes: int,
        block: int | None = None,
        block_vertices: tuple[int, ...] | None = None,
    ) -> None:
        self.lower = lower
        self.upper = upper
        self.ordering = ordering
        self.nodes = nodes
        self.block = block
        self.block_vertices = block_vertices
        where = "" if block is None else f" in block {block}"
        super().__init__(
            f"node budget exhausted after {nodes} nodes{where}: value in [{lower}, {upper}]"
        )


# ---------------------------------------------------------------------------
# exhaustive oracle


def altitude_oracle(g: Graph, floor: int | None = None, max_n: int = ORACLE_MAX_N) -> AltitudeResult:
    """Minimum longest-monotonic-cycle length over all orderings starting at 0.

    ``floor`` is a value no ordering can go below (default: 2 if ``g`` has
    an edge, else 1); the scan stops once an ordering reaches it.  Passing
    the clique number is safe because a clique, read in any order, is a
    monotonic cycle.
    """
    if g.n > max_n:
        raise ValueError(f"exhaustive oracle limited to n <= {max_n}, got n={g.n}")
    start = time.perf_counter()
    if floor is None:
        floor = 2 if g.num_edges else 1
    nbrs = [g.neighbors(v) for v in range(g.n)]
    best = g.n + 1
    best_seq: tuple[int, ...] = tuple(range(g.n))
    evaluated = 0
    pos = [0] * g.n
    for tail in permutations(range(1, g.n)):
        seq = (0,) + tail
        for k, v in enumerate(seq):
            pos[v] = k
        padj = []
        for v in seq:
            row = 0
            for u in nbrs[v]:
                row |= 1 << pos[u]
            padj.append(row)
        evaluated += 1
        value = cycle_length(padj, stop_at=best)
        if value < best:
            best, best_seq = value, seq
            if best <= floor:
                break
    stats = SearchStats(orderings=evaluated, seconds=time.perf_counter() - start)
    return AltitudeResult(best, CircularOrdering(best_seq), "oracle", stats=stats)


# ---------------------------------------------------------------------------
# branch and bound


class _Exhausted(Exception):
    pass


class _PrefixSearch:
    """Depth-first search over orderings with vertex 0 in front.

    For every placed start position ``a`` the search keeps ``reach[a]``, the
    placed vertices reachable from ``seq[a]`` by a position-increasing path,
    and ``lens[a][v]``, the vertex count of the longest such path to ``v``.
    Appending a vertex updates both in ``O(k * degree)``.  Vertices placed
    later cannot break a monotonic cycle already inside the prefix, so the
    prefix value is a lower bound for every completion.
    """

    def __init__(self, g: Graph, best: int, lower: int, budget: int | None, shared=None):
        self.g = g
        self.n = g.n
        self.adj = g.adj
        self.best = best
        self.best_seq: tuple[int, ...] | None = None
        self.lower = lower
        self.budget = budget
        self.nodes = 0
        self.leaves = 0
        self.shared = shared  # (best Value, nodes Value) in parallel mode
        self._pending_nodes = 0
        deg = g.degrees()
        self.branch_order = sorted(range(1, self.n), key=lambda v: (-deg[v], v))
        self.seq = [0]
        self.lens = [[0] * self.n for _ in range(self.n)]
        self.lens[0][0] = 1

    def current_best(self) -> int:
        if self.shared is not None:
            shared_best = self.shared[0].value
            if shared_best < self.best:
                self.best = shared_best
        return self.best

    def record(self, value: int) -> None:
        self.best = value
        self.best_seq = tuple(self.seq)
        if self.shared is not None:
            with self.shared[0].get_lock():
                if value < self.shared[0].value:
                    self.shared[0].value = value

    def tick(self) -> None:
        self.nodes += 1
        if self.shared is not None:
            self._pending_nodes += 1
            if self._pending_nodes == 256:
                with self.shared[1].get_lock():
                    self.shared[1].value += 256
                    total = self.shared[1].value
                self._pending_nodes = 0
                if self.budget is not None and total > self.budget:
                    raise _Exhausted
        elif self.budget is not None and self.nodes > self.budget:
            raise _Exhausted

    def extend(self, placed: int, reach: list[int], value: int, v: int) -> tuple[list[int], int] | None:
        """Place ``v`` next; return the new reach list and prefix value, or
        ``None`` when the prefix already reaches the best value."""
        k = len(self.seq)
        adj_v = self.adj[v]
        nb = adj_v & placed
        best = self.current_best()
        if nb and value < 2:
            value = 2
            if value >= best:
                return None
        bit = 1 << v
        new_reach = reach[:]
        seq = self.seq
        lens = self.lens
        for a in range(k):
            preds = nb & reach[a]
            if not preds:
                continue
            la = lens[a]
            m = 0
            while preds:
                low = preds & -preds
                lu = la[low.bit_length() - 1]
                if lu > m:
                    m = lu
                preds ^= low
            m += 1
            la[v] = m
            new_reach[a] |= bit
            if m > value and adj_v >> seq[a] & 1:
                value = m
                if value >= best:
                    return None
        lens[k][v] = 1
        new_reach.append(bit)
        return new_reach, value

    def completion_bound(self, remaining: int, reach: list[int]) -> int:
        """Least value of any completion of the current prefix.

        A position-increasing path from ``s`` to ``b`` inside the prefix,
        followed by a clique of unplaced vertices adjacent to both ``s`` and
        ``b``, is a monotonic cycle in every completion.
        """
        adj = self.adj
        seq = self.seq
        bound = 0
        for a, r in enumerate(reach):
            around_s = adj[seq[a]] & remaining
            if not around_s:
                continue
            la = self.lens[a]
            while r:
                low = r & -r
                b = low.bit_length() - 1
                r ^= low
                common = around_s & adj[b]
                if not common:
                    continue
                # greedy clique inside common: any clique gives a valid bound
                extra = 0
                c = common
                while c:
                    x = c & -c
                    extra += 1
                    c &= adj[x.bit_length() - 1]
                if la[b] + extra > bound:
                    bound = la[b] + extra
        return bound

    def dfs(self, placed: int, reach: list[int], value: int, first: int) -> None:
        self.tick()
        if self.current_best() <= self.lower:
            return
        remaining = self.g.vertex_mask & ~placed
        if not remaining:
            self.leaves += 1
            if value < self.best:
                self.record(value)
            return
        # reversal symmetry: keep orderings whose last vertex exceeds the second
        if first >= 0 and not remaining >> (first + 1):
            return
        if self.completion_bound(remaining, reach) >= self.best:
            return
        for v in self.branch_order:
            if not remaining >> v & 1:
                continue
            step = self.extend(placed, reach, value, v)
            if step is None:
                continue
            self.seq.append(v)
            self.dfs(placed | (1 << v), step[0], step[1], v if first < 0 and self.n >= 3 else first)
            self.seq.pop()
            if self.current_best() <= self.lower:
                return

    def run(self, firsts: list[int] | None = None) -> None:
        placed = 1
        reach = [1]
        if firsts is None:
            self.dfs(placed, reach, 1, -1)
            return
        for v in firsts:
            step = self.extend(placed, reach, 1, v)
            if step is None:
                continue
            self.seq.append(v)
            self.dfs(placed | (1 << v), step[0], step[1], v if self.n >= 3 else -1)
            self.seq.pop()


_worker_shared = None


def _init_worker(best_value, node_value) -> None:
    global _worker_shared
    _worker_shared = (best_value, node_value)


def _bb_branch(adj: tuple[int, ...], first: int, lower: int, budget: int | None):
    g = Graph(len(adj), adj)
    search = _PrefixSearch(g, _worker_shared[0].value, lower, budget, shared=_worker_shared)
    exhausted = False
    try:
        search.run([first])
    except _Exhausted:
        exhausted = True
    return search.best_seq, search.best, search.nodes, search.leaves, exhausted


def _heuristic_ordering(g: Graph) -> tuple[int, ...]:
    """Breadth-first order from vertex 0, visiting high-degree vertices first."""
    deg = g.degrees()
    seen = 1
    order = [0]
    head = 0
    while len(order) < g.n:
        if head == len(order):
            v = next(u for u in range(g.n) if not seen >> u & 1)
            order.append(v)
            seen |= 1 << v
        u = order[head]
        head += 1
        for w in sorted(iter_bits(g.adj[u] & ~seen), key=lambda w: (-deg[w], w)):
            order.append(w)
            seen |= 1 << w
    return tuple(order)


def altitude_bb(
    g: Graph,
    initial_upper: int | None = None,
    node_budget: int | None = None,
    workers: int = 1,
) -> AltitudeResult:
    """Exact circular altitude by branch and bound over ordering prefixes.

    Stops as soon as an ordering reaches the clique number.  Raises
    :class:`BudgetExceeded` when more than ``node_budget`` search nodes would
    be needed.  With ``workers > 1`` the branches for the second position are
    spread over processes sharing one best-so-far bound; the value does not
    depend on ``workers``, the witness ordering may.
    """
    start = time.perf_counter()
    n = g.n
    lower = clique_number(g)
    seed_seq = _heuristic_ordering(g)
    seed_value = ordering_value(g, seed_seq)
    stats = SearchStats(orderings=1)

    def done(value: int, seq) -> AltitudeResult:
        stats.seconds = time.perf_counter() - start
        return AltitudeResult(value, CircularOrdering(tuple(seq)).anchored(0), "branch_and_bound", stats=stats)

    if seed_value <= lower or n <= 2:
        return done(seed_value, seed_seq)

    bound = seed_value
    if initial_upper is not None and initial_upper < seed_value:
        bound = initial_upper + 1

    if workers > 1 and n >= 4:
        best_seq, best, nodes, leaves, exhausted = _run_parallel(g, bound, lower, node_budget, workers)
    else:
        search = _PrefixSearch(g, bound, lower, node_budget)
        exhausted = False
        try:
            search.run()
        except _Exhausted:
            exhausted = True
        best_seq, best, nodes, leaves = search.best_seq, search.best, search.nodes, search.leaves
    stats.nodes += nodes
    stats.orderings += leaves

    if best_seq is None and not exhausted and bound < seed_value:
        # the caller's upper bound was wrong; search again from the seed ordering
        return altitude_bb(g, None, node_budget, workers)
    if best_seq is None:
        best_seq, best = seed_seq, seed_value
    if exhausted:
        raise BudgetExceeded(lower, best, CircularOrdering(tuple(best_seq)).anchored(0), stats.nodes)
    return done(best, best_seq)


def _run_parallel(g: Graph, bound: int, lower: int, budget: int | None, workers: int):
    ctx = multiprocessing.get_context()
    best_value = ctx.Value("i", bound)
    node_value = ctx.Value("q", 0)
    deg = g.degrees()
    firsts = sorted(range(1, g.n), key=lambda v: (-deg[v], v))
    with ProcessPoolExecutor(
        max_workers=workers, mp_context=ctx, initializer=_init_worker, initargs=(best_value, node_value)
    ) as pool:
        results = list(pool.map(_bb_branch, [g.adj] * len(firsts), firsts, [lower] * len(firsts),
                                [budget] * len(firsts)))
    best, best_seq = bound, None
    nodes = leaves = 0
    exhausted = False
    for seq, value, n_nodes, n_leaves, ex in results:
        nodes += n_nodes
        leaves += n_leaves
        exhausted |= ex
        if seq is not None and value < best:
            best, best_seq = value, seq
    return best_seq, best, nodes, leaves, exhausted


# ---------------------------------------------------------------------------
# block driver


def assemble_block_ordering(
    g: Graph, block_sets: list[tuple[int, ...]], block_orders: list[tuple[int, ...]]
) -> tuple[int, ...]:
    """One ordering of ``g`` built from an ordering of each block.

    Components are concatenated.  Within a component, each block ordering is
    rotated to start at the cut-vertex joining it to its parent block, and
    the rest of it is inserted right after that cut-vertex.  Any monotonic
    cycle of length three or more lies inside one block and meets its
    vertices in a rotation of that block's ordering.
    """
    at: dict[int, list[int]] = {}
    for k, verts in enumerate(block_sets):
        for v in verts:
            at.setdefault(v, []).append(k)
    visited = [False] * len(block_sets)
    out: list[int] = []

    def expand(k: int, entry: int | None) -> list[int]:
        visited[k] = True
        seq = list(block_orders[k])
        if entry is not None:
            i = seq.index(entry)
            seq = seq[i:] + seq[:i]
        result = []
        for y in seq:
            result.append(y)
            for child in at[y]:
                if not visited[child]:
                    result.extend(expand(child, y)[1:])
        return result

    for k in range(len(block_sets)):
        if not visited[k]:
            out.extend(expand(k, None))
    return tuple(out)


def altitude(g: Graph, node_budget: int | None = None, workers: int = 1) -> AltitudeResult:
    """Circular altitude as the maximum over blocks, with per-block values."""
    start = time.perf_counter()
    dec = blocks(g)
    stats = SearchStats()
    per_block = []
    orders = []
    for k, verts in enumerate(dec.blocks):
        if len(verts) <= 2:
            value, order = len(verts), verts
        else:
            sub, index_map = g.induced(verts)
            try:
                r = altitude_bb(sub, node_budget=node_budget, workers=workers)
            except BudgetExceeded as e:
                raise BudgetExceeded(
                    e.lower,
                    e.upper,
                    CircularOrdering(tuple(index_map[v] for v in e.ordering.seq)),
                    e.nodes,
                    block=k,
                    block_vertices=verts,
                ) from None
            stats.add(r.stats)
            value, order = r.value, tuple(index_map[v] for v in r.witness.seq)
        per_block.append(BlockValue(k, verts, value))
        orders.append(order)
    value = max(b.value for b in per_block)
    witness = CircularOrdering(assemble_block_ordering(g, list(dec.blocks), orders)).anchored(0)
    stats.seconds = time.perf_counter() - start
    return AltitudeResult(value, witness, "block_driver", per_block, stats)


# ---------------------------------------------------------------------------
# certificates


class CertificateCheck(NamedTuple):
    name: str
    status: str  # "pass", "fail" or "skipped"
    detail: str


@dataclass
class CertificateReport:
    checks: list[CertificateCheck]

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def status(self, name: str) -> str:
        return next(c.status for c in self.checks if c.name == name)


def certify(g: Graph, r: AltitudeResult) -> CertificateReport:
    """Re-check a result: the witness ordering must evaluate to the claimed
    value, and for ``n <= 7`` a full scan of orderings must give the same
    minimum."""
    checks = []
    try:
        observed = ordering_value(g, r.witness.seq)
    except ValueError as e:
        checks.append(CertificateCheck("upper", "fail", str(e)))
    else:
        ok = observed == r.value
        checks.append(
            CertificateCheck("upper", "pass" if ok else "fail", f"witness evaluates to {observed}, claimed {r.value}")
        )
    if g.n <= CERTIFY_LOWER_MAX_N:
        exact = altitude_oracle(g).value
        ok = exact == r.value
        checks.append(
            CertificateCheck("lower", "pass" if ok else "fail", f"exhaustive minimum {exact}, claimed {r.value}")
        )
    else:
        checks.append(CertificateCheck("lower", "skipped", f"n={g.n} above {CERTIFY_LOWER_MAX_N}"))
    return CertificateReport(checks)

