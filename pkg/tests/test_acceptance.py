"""Acceptance criteria, one test each.

Every test prints a single ``[ACCEPT n] PASS|FAIL ...`` line, also under
captured pytest output.  Run directly (``python tests/test_acceptance.py``)
to get just those lines.
"""

import sys
import time
from contextlib import nullcontext

from circalt.altitude import altitude, altitude_oracle
from circalt.catalog import connected_catalog, count_connected, count_graphs, graph_catalog, tree_catalog
from circalt.graph import Graph, complete, cycle
from circalt.monotonic import enumerate_monotonic_cycles, max_monotonic_cycle
from circalt.verify import (
    check_block_maximum,
    check_bounds,
    check_core_invariance,
    check_hom_invariance,
    check_kernel_oracle,
    check_ordering_symmetries,
    check_product_maximum,
    hom_equivalent_pairs,
    hom_pairs,
    random_cut_vertex_graphs,
    random_ordered_graphs,
    random_product_pairs,
    small_product_pairs,
)

SEED = 2024


def _catalog(max_n, connected=False):
    pick = connected_catalog if connected else graph_catalog
    return [g for n in range(1, max_n + 1) for g in pick(n)]


def _report(capsys, number, ok, detail, started):
    line = f"[ACCEPT {number}] {'PASS' if ok else 'FAIL'}  {detail}  ({time.perf_counter() - started:.1f}s)"
    with capsys.disabled() if capsys is not None else nullcontext():
        print(("\n" if capsys is not None else "") + line)
    assert ok, line


def _failures(reports):
    return sum(len(r.failures) for r in reports)


def test_anchor_values(capsys):
    start = time.perf_counter()
    values = {"K1": altitude_oracle(complete(1)).value, "K2": altitude_oracle(complete(2)).value}
    for n in range(1, 8):
        values[f"K{n}"] = altitude_oracle(complete(n)).value
        assert altitude(complete(n)).value == values[f"K{n}"]
    elapsed = time.perf_counter() - start
    ok = all(values[f"K{n}"] == n for n in range(1, 8)) and elapsed < 1.0
    _report(capsys, 1, ok, f"alt(K_n) = n for n <= 7, {elapsed:.3f}s < 1s", start)


def test_block_maximum(capsys):
    start = time.perf_counter()
    counts_ok = count_graphs(6) == len(graph_catalog(6)) == 156 and count_connected(6) == len(connected_catalog(6)) == 112
    catalog = _catalog(6, connected=True)
    randoms = list(random_cut_vertex_graphs(500, SEED, max_n=8))
    reports = [check_block_maximum(catalog, SEED), check_block_maximum(randoms, SEED)]
    ok = counts_ok and _failures(reports) == 0 and reports[1].instances == 500
    detail = f"n=6 catalog 112 of 156 self-check={counts_ok}, {len(catalog)} connected graphs n <= 6 + 500 cut-vertex graphs, failures={_failures(reports)}"
    _report(capsys, 2, ok, detail, start)


def test_hom_invariance_and_cores(capsys):
    start = time.perf_counter()
    reports = [
        check_core_invariance(_catalog(6), SEED),
        check_hom_invariance(list(hom_equivalent_pairs(200, SEED)), SEED),
        check_hom_invariance(list(hom_pairs(500, SEED + 1)), SEED + 1),
    ]
    ok = _failures(reports) == 0 and [r.instances for r in reports[1:]] == [200, 500]
    detail = f"cores on {reports[0].instances} graphs, 200 equivalent pairs, 500 hom pairs, failures={_failures(reports)}"
    _report(capsys, 3, ok, detail, start)


def test_product_maximum(capsys):
    start = time.perf_counter()
    small = small_product_pairs(10)
    reports = [check_product_maximum(small, SEED), check_product_maximum(list(random_product_pairs(100, SEED)), SEED)]
    ok = _failures(reports) == 0 and reports[1].instances == 100
    detail = f"{len(small)} named pairs + 100 random pairs, n_G*n_H <= 10, failures={_failures(reports)}"
    _report(capsys, 4, ok, detail, start)


def test_bounds_sandwich(capsys):
    start = time.perf_counter()
    graphs = [g for g in _catalog(6) if g.num_edges]
    report = check_bounds(graphs, SEED)
    ok = report.passed and report.instances == len(graphs)
    detail = f"omega <= alt <= chi_c and girth rule on {len(graphs)} graphs with edges, failures={len(report.failures)}"
    _report(capsys, 5, ok, detail, start)


def test_kernel_oracle(capsys):
    start = time.perf_counter()
    from itertools import permutations

    exhaustive = [(g, seq) for g in _catalog(5) for seq in permutations(range(g.n))]
    reports = [check_kernel_oracle(exhaustive, SEED), check_kernel_oracle(random_ordered_graphs(10_000, SEED), SEED)]
    ok = _failures(reports) == 0 and reports[1].instances == 10_000
    detail = f"{len(exhaustive)} exhaustive + 10000 random orderings, discrepancies={_failures(reports)}"
    _report(capsys, 6, ok, detail, start)


def test_rotation_and_reversal(capsys):
    start = time.perf_counter()
    graphs = _catalog(5)
    report = check_ordering_symmetries(graphs, SEED)
    ok = report.passed and report.instances == len(graphs)
    detail = f"all orderings of {len(graphs)} graphs with n <= 5, failures={len(report.failures)}"
    _report(capsys, 7, ok, detail, start)


def test_family_values(capsys):
    start = time.perf_counter()
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    cycles = {n: altitude_oracle(cycle(n)).value for n in range(4, 9)}
    trees = [altitude_oracle(t).value for n in range(2, 9) for t in tree_catalog(n)]
    bow = altitude_oracle(bowtie).value
    elapsed = time.perf_counter() - start
    ok = set(cycles.values()) == {2} and set(trees) == {2} and bow == 3 and elapsed < 60
    detail = f"C4..C8 = {sorted(set(cycles.values()))}, {len(trees)} trees = {sorted(set(trees))}, bowtie = {bow}"
    _report(capsys, 8, ok, detail, start)


def test_kernel_spot_check_against_enumeration():
    # guards the acceptance harness itself: a wrong kernel must be noticed
    g = cycle(5)
    seq = (0, 2, 4, 1, 3)
    assert max_monotonic_cycle(g, seq).length == max(c.length for c in enumerate_monotonic_cycles(g, seq))


if __name__ == "__main__":
    failed = 0
    for fn in (test_anchor_values, test_block_maximum, test_hom_invariance_and_cores, test_product_maximum,
               test_bounds_sandwich, test_kernel_oracle, test_rotation_and_reversal, test_family_values):
        try:
            fn(None)
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
