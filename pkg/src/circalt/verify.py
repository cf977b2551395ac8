"""Machine checks of structural properties of circular altitude on small graphs.

Each ``check_*`` function consumes a stream of graphs (or graph pairs),
tests one relation per instance and returns a :class:`PropertyReport`.
Ground truth is always :func:`~circalt.altitude.altitude_oracle`; the
branch-and-bound and block-driver paths are what get checked against it.

Random streams use :class:`random.Random` (Mersenne Twister) seeded with
the given integer.  Edges of ``G(n, p)`` are drawn in the order
``(0,1), (0,2), ..., (n-2,n-1)``, each present iff ``rng.random() < p``, so
a seed reproduces the same graphs on every platform.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import permutations
from random import Random
from typing import Callable, Iterable, Iterator, Sequence

from .altitude import altitude, altitude_oracle
from .catalog import connected_catalog, count_connected, count_graphs, graph_catalog
from .formats import encode_graph6, parse_graph6
from .graph import Graph, blocks, cartesian_product, complete, components, cycle, girth, path
from .homcore import circular_chromatic, clique_number, core_of, hom_exists, is_core
from .monotonic import CircularOrdering, enumerate_monotonic_cycles, max_monotonic_cycle, ordering_value

__all__ = [
    "Failure",
    "PropertyReport",
    "random_graphs",
    "random_cut_vertex_graphs",
    "hom_equivalent_pairs",
    "hom_pairs",
    "named_factors",
    "small_product_pairs",
    "random_product_pairs",
    "random_ordered_graphs",
    "has_cut_vertex",
    "check_block_maximum",
    "check_product_maximum",
    "check_bounds",
    "check_hom_invariance",
    "check_core_invariance",
    "check_kernel_oracle",
    "check_ordering_symmetries",
    "check_catalog_counts",
    "SUITES",
    "run_suite",
    "replay",
]


@dataclass
class Failure:
    inputs: list[str]
    expected: str
    observed: dict


@dataclass
class PropertyReport:
    property_id: str
    instances: int = 0
    skipped: int = 0
    failures: list[Failure] = field(default_factory=list)
    seed: int | None = None
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        line = (
            f"{self.property_id:<22} {verdict}  instances={self.instances:<6} "
            f"skipped={self.skipped:<5} failures={len(self.failures):<4} "
            f"seed={self.seed}  {self.elapsed:.2f}s"
        )
        lines = [line]
        for f in self.failures:
            lines.append(f"    {' '.join(f.inputs)}: expected {f.expected}, observed {f.observed}")
        return "\n".join(lines)


def _run(
    property_id: str,
    check: Callable,
    items: Iterable,
    seed: int | None,
    workers: int,
) -> PropertyReport:
    start = time.perf_counter()
    items = list(items)
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(check, items, chunksize=max(1, len(items) // (4 * workers))))
    else:
        outcomes = [check(item) for item in items]
    report = PropertyReport(property_id, seed=seed)
    for outcome in outcomes:
        if outcome == "skipped":
            report.skipped += 1
            continue
        report.instances += 1
        if outcome is not None:
            report.failures.append(outcome)
    report.failures.sort(key=lambda f: f.inputs)
    report.elapsed = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# graph streams


def _gnp(rng: Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def random_graphs(n: int, p: float, count: int, seed: int) -> Iterator[Graph]:
    """``count`` Erdős–Rényi graphs ``G(n, p)`` from one seeded stream."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = Random(seed)
    for _ in range(count):
        yield _gnp(rng, n, p)


def has_cut_vertex(g: Graph) -> bool:
    """Direct test: deleting some vertex increases the number of components."""
    base = len(components(g))
    for v in range(g.n):
        if g.n == 1:
            return False
        rest, _ = g.induced(u for u in range(g.n) if u != v)
        if len(components(rest)) > base:
            return True
    return False


def random_cut_vertex_graphs(count: int, seed: int, min_n: int = 3, max_n: int = 8) -> Iterator[Graph]:
    """Random graphs with at least one cut-vertex, by rejection from ``G(n, p)``.

    ``n`` is uniform on ``min_n..max_n`` and ``p`` uniform on ``[0.2, 0.8]``.
    """
    rng = Random(seed)
    made = 0
    while made < count:
        g = _gnp(rng, rng.randint(min_n, max_n), rng.uniform(0.2, 0.8))
        if has_cut_vertex(g):
            made += 1
            yield g


def _shuffle_labels(rng: Random, g: Graph) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def hom_equivalent_pairs(count: int, seed: int, max_n: int = 6) -> Iterator[tuple[Graph, Graph]]:
    """Pairs ``(G, H)`` with homomorphisms both ways.

    ``H`` is ``G`` plus vertices ``w`` joined to a subset of the neighbours
    of some existing vertex ``u``; mapping ``w`` to the image of ``u``
    retracts ``H`` onto ``G``, and ``G`` sits inside ``H``.  Both sides are
    then relabelled at random.
    """
    rng = Random(seed)
    made = 0
    while made < count:
        n = rng.randint(2, max_n - 1)
        g = _gnp(rng, n, rng.uniform(0.3, 0.9))
        if not g.num_edges:
            continue
        h = g
        for _ in range(rng.randint(1, max_n - n)):
            u = rng.randrange(h.n)
            nbrs = h.neighbors(u)
            subset = [x for x in nbrs if rng.random() < 0.7]
            rows = list(h.adj) + [0]
            w = h.n
            for x in subset:
                rows[x] |= 1 << w
                rows[w] |= 1 << x
            h = Graph(h.n + 1, tuple(rows))
        made += 1
        yield _shuffle_labels(rng, g), _shuffle_labels(rng, h)


def hom_pairs(count: int, seed: int, max_n: int = 6) -> Iterator[tuple[Graph, Graph]]:
    """Random pairs ``(G, H)``, kept only when a homomorphism ``G -> H`` exists."""
    rng = Random(seed)
    made = 0
    while made < count:
        g = _gnp(rng, rng.randint(1, max_n), rng.uniform(0.1, 0.7))
        h = _gnp(rng, rng.randint(1, max_n), rng.uniform(0.3, 0.9))
        if hom_exists(g, h) is not None:
            made += 1
            yield g, h


def named_factors() -> dict[str, Graph]:
    return {
        "K1": complete(1),
        "K2": complete(2),
        "K3": complete(3),
        "P3": path(3),
        "P4": path(4),
        "C4": cycle(4),
        "C5": cycle(5),
    }


def small_product_pairs(max_product: int = 10) -> list[tuple[Graph, Graph]]:
    """All ordered pairs of named factors whose product has at most ``max_product`` vertices."""
    factors = list(named_factors().values())
    return [(g, h) for g in factors for h in factors if g.n * h.n <= max_product]


def random_product_pairs(count: int, seed: int, max_product: int = 10) -> Iterator[tuple[Graph, Graph]]:
    rng = Random(seed)
    sizes = [(a, b) for a in range(1, max_product + 1) for b in range(1, max_product + 1) if a * b <= max_product]
    for _ in range(count):
        a, b = rng.choice(sizes)
        yield _gnp(rng, a, rng.uniform(0.2, 0.9)), _gnp(rng, b, rng.uniform(0.2, 0.9))


def random_ordered_graphs(count: int, seed: int, min_n: int = 6, max_n: int = 8) -> Iterator[tuple[Graph, tuple[int, ...]]]:
    """Random ``(graph, ordering)`` pairs for kernel checks."""
    rng = Random(seed)
    for _ in range(count):
        g = _gnp(rng, rng.randint(min_n, max_n), rng.random())
        seq = list(range(g.n))
        rng.shuffle(seq)
        yield g, tuple(seq)


# ---------------------------------------------------------------------------
# per-instance checks (module level so worker processes can pickle them)


def _block_instance(g: Graph):
    exact = altitude_oracle(g).value
    values = []
    for verts in blocks(g).blocks:
        if len(verts) <= 2:
            values.append(len(verts))
        else:
            values.append(altitude_oracle(g.induced(verts)[0]).value)
    driver = altitude(g).value
    if exact == max(values) == driver:
        return None
    return Failure(
        [encode_graph6(g)],
        "oracle == max block oracle == block driver",
        {"oracle": exact, "block_max": max(values), "driver": driver},
    )


def check_block_maximum(graphs: Iterable[Graph], seed: int | None = None, workers: int = 1) -> PropertyReport:
    """Altitude equals the largest block altitude."""
    return _run("block_maximum", _block_instance, graphs, seed, workers)


def _lexicographic_ordering(g_order: Sequence[int], h_order: Sequence[int], h_n: int) -> tuple[int, ...]:
    return tuple(a * h_n + b for a in g_order for b in h_order)


def _product_instance(pair):
    g, h = pair
    a = altitude_oracle(g, floor=clique_number(g))
    b = altitude_oracle(h, floor=clique_number(h))
    prod = cartesian_product(g, h)
    c = altitude_oracle(prod, floor=clique_number(prod)).value
    lex = ordering_value(prod, _lexicographic_ordering(a.witness.seq, b.witness.seq, h.n))
    target = max(a.value, b.value)
    if c == target and lex <= target:
        return None
    return Failure(
        [encode_graph6(g), encode_graph6(h)],
        "alt(G x H) == max(alt G, alt H) and lexicographic ordering <= max",
        {"alt_g": a.value, "alt_h": b.value, "alt_product": c, "lexicographic": lex},
    )


def check_product_maximum(
    pairs: Iterable[tuple[Graph, Graph]], seed: int | None = None, workers: int = 1
) -> PropertyReport:
    """Altitude of a Cartesian product equals the larger factor altitude."""
    return _run("product_maximum", _product_instance, pairs, seed, workers)


def _bounds_instance(g: Graph):
    omega = clique_number(g)
    alt = altitude_oracle(g).value
    observed: dict = {"omega": omega, "alt": alt}
    ok = omega <= alt
    if g.num_edges:
        chi_c = circular_chromatic(g).value
        observed["chi_c"] = str(chi_c)
        ok = ok and alt <= chi_c
    gi = girth(g)
    observed["girth"] = str(gi)
    if alt >= 3:
        ok = ok and alt >= gi
    if ok:
        return None
    return Failure([encode_graph6(g)], "omega <= alt <= chi_c and (alt >= 3 => alt >= girth)", observed)


def check_bounds(graphs: Iterable[Graph], seed: int | None = None, workers: int = 1) -> PropertyReport:
    return _run("bounds", _bounds_instance, graphs, seed, workers)


def _hom_instance(pair):
    g, h = pair
    forward = hom_exists(g, h)
    if forward is None:
        return "skipped"
    a = altitude_oracle(g).value
    b = altitude_oracle(h).value
    backward = hom_exists(h, g)
    ok = a <= b and (backward is None or a == b)
    if ok:
        return None
    return Failure(
        [encode_graph6(g), encode_graph6(h)],
        "G -> H implies alt G <= alt H; equality when H -> G too",
        {"alt_g": a, "alt_h": b, "h_to_g": backward is not None},
    )


def check_hom_invariance(
    pairs: Iterable[tuple[Graph, Graph]], seed: int | None = None, workers: int = 1
) -> PropertyReport:
    """Homomorphism monotonicity and equality for homomorphically equivalent pairs.

    Pairs without a homomorphism ``G -> H`` are counted as skipped.
    """
    return _run("hom_invariance", _hom_instance, pairs, seed, workers)


def _core_instance(g: Graph):
    core, _ = core_of(g)
    a = altitude_oracle(g).value
    b = altitude_oracle(core).value
    if a == b and is_core(core):
        return None
    return Failure(
        [encode_graph6(g)], "alt(core G) == alt G and core has only bijective endomorphisms",
        {"alt": a, "alt_core": b, "core": encode_graph6(core)},
    )


def check_core_invariance(graphs: Iterable[Graph], seed: int | None = None, workers: int = 1) -> PropertyReport:
    return _run("core_invariance", _core_instance, graphs, seed, workers)


def _kernel_instance(item):
    g, seq = item
    fast = max_monotonic_cycle(g, seq)
    slow = max(w.length for w in enumerate_monotonic_cycles(g, seq, 1))
    if fast.length == slow and ordering_value(g, seq) == slow:
        return None
    return Failure([encode_graph6(g)], "kernel == enumeration", {"ordering": list(seq), "kernel": fast.length, "enumeration": slow})


def check_kernel_oracle(items: Iterable[tuple[Graph, Sequence[int]]], seed: int | None = None, workers: int = 1) -> PropertyReport:
    """Longest-monotonic-cycle kernel against subset enumeration."""
    return _run("kernel_oracle", _kernel_instance, items, seed, workers)


def _symmetry_instance(g: Graph):
    bad = []
    for seq in permutations(range(g.n)):
        order = CircularOrdering(seq)
        value = ordering_value(g, seq)
        rotated = {ordering_value(g, order.rotate(k).seq) for k in range(g.n)}
        if rotated != {value} or ordering_value(g, order.reversed().seq) != value:
            bad.append(list(seq))
    if not bad:
        return None
    return Failure([encode_graph6(g)], "rotation and reversal leave the value unchanged", {"orderings": bad[:5]})


def check_ordering_symmetries(graphs: Iterable[Graph], seed: int | None = None, workers: int = 1) -> PropertyReport:
    """Every ordering: all rotations and the reversal give the same value."""
    return _run("ordering_symmetries", _symmetry_instance, graphs, seed, workers)


def check_catalog_counts(max_n: int = 6) -> PropertyReport:
    """Catalog sizes against Burnside counting (all graphs and connected graphs)."""
    start = time.perf_counter()
    report = PropertyReport("catalog_counts")
    for n in range(1, max_n + 1):
        report.instances += 1
        built, expected = len(graph_catalog(n)), count_graphs(n)
        built_c, expected_c = len(connected_catalog(n)), count_connected(n)
        if built != expected or built_c != expected_c:
            report.failures.append(
                Failure([f"n={n}"], "catalog size == Burnside count",
                        {"graphs": built, "expected": expected, "connected": built_c, "expected_connected": expected_c})
            )
    report.elapsed = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# named suites


def _catalog_upto(max_n: int, connected: bool = False) -> list[Graph]:
    out = []
    for n in range(1, max_n + 1):
        out.extend(connected_catalog(n) if connected else graph_catalog(n))
    return out


def _suite_blocks(max_n, seed, count, workers):
    graphs = _catalog_upto(max_n, connected=True) + list(random_cut_vertex_graphs(count, seed, max_n=max_n + 2))
    return [check_catalog_counts(max_n), check_block_maximum(graphs, seed, workers)]


def _suite_product(max_n, seed, count, workers, pairs="all"):
    items = []
    if pairs in ("small", "all"):
        items += small_product_pairs()
    if pairs in ("random", "all"):
        items += list(random_product_pairs(count, seed))
    return [check_product_maximum(items, seed, workers)]


def _suite_bounds(max_n, seed, count, workers):
    return [check_bounds(_catalog_upto(max_n), seed, workers)]


def _suite_hom(max_n, seed, count, workers):
    return [
        check_core_invariance(_catalog_upto(max_n), seed, workers),
        check_hom_invariance(list(hom_equivalent_pairs(count, seed, max_n)), seed, workers),
        check_hom_invariance(list(hom_pairs(count, seed + 1, max_n)), seed + 1, workers),
    ]


SUITES = {
    "blocks": _suite_blocks,
    "product": _suite_product,
    "bounds": _suite_bounds,
    "hom": _suite_hom,
}


def run_suite(
    name: str, max_n: int = 6, seed: int = 0, count: int = 50, workers: int = 1, pairs: str = "all"
) -> list[PropertyReport]:
    """Run one named suite (or ``"all"``) and return its reports."""
    if name == "all":
        reports = []
        for key in SUITES:
            reports.extend(run_suite(key, max_n, seed, count, workers, pairs))
        return reports
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
    if name == "product":
        return _suite_product(max_n, seed, count, workers, pairs)
    return SUITES[name](max_n, seed, count, workers)


def replay(failure: Failure) -> list[Graph]:
    """Graphs recorded in a failure, ready to feed back into a check."""
    return [parse_graph6(s) for s in failure.inputs]
