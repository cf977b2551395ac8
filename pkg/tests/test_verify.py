import json

import pytest

from circalt import verify
from circalt.altitude import AltitudeResult
from circalt.formats import encode_graph6
from circalt.graph import complete, cycle, is_connected
from circalt.homcore import hom_exists
from circalt.monotonic import CircularOrdering


def test_gnp_extremes():
    assert all(g.num_edges == 0 for g in verify.random_graphs(6, 0.0, 5, seed=1))
    assert all(g == complete(6) for g in verify.random_graphs(6, 1.0, 5, seed=1))
    with pytest.raises(ValueError):
        list(verify.random_graphs(4, 1.5, 1, seed=0))


def test_streams_are_reproducible():
    a = [encode_graph6(g) for g in verify.random_graphs(7, 0.4, 20, seed=5)]
    b = [encode_graph6(g) for g in verify.random_graphs(7, 0.4, 20, seed=5)]
    c = [encode_graph6(g) for g in verify.random_graphs(7, 0.4, 20, seed=6)]
    assert a == b != c
    assert list(verify.random_product_pairs(10, 3)) == list(verify.random_product_pairs(10, 3))


def test_cut_vertex_stream():
    graphs = list(verify.random_cut_vertex_graphs(40, seed=2))
    assert len(graphs) == 40
    assert all(verify.has_cut_vertex(g) and 3 <= g.n <= 8 for g in graphs)
    assert not verify.has_cut_vertex(cycle(5))
    assert not verify.has_cut_vertex(complete(1))


def test_pair_streams_have_the_promised_homomorphisms():
    for g, h in verify.hom_equivalent_pairs(30, seed=4):
        assert hom_exists(g, h) is not None and hom_exists(h, g) is not None
    for g, h in verify.hom_pairs(30, seed=4):
        assert hom_exists(g, h) is not None


def test_small_product_pairs_respect_size():
    pairs = verify.small_product_pairs()
    assert all(g.n * h.n <= 10 for g, h in pairs)
    names = verify.named_factors()
    assert (names["K2"], names["C5"]) in pairs


def test_suites_pass_and_are_deterministic():
    first = verify.run_suite("all", max_n=5, seed=3, count=15)
    second = verify.run_suite("all", max_n=5, seed=3, count=15)
    assert all(r.passed for r in first)
    strip = lambda rs: [{k: v for k, v in r.to_dict().items() if k != "elapsed"} for r in rs]
    assert strip(first) == strip(second)
    ids = [r.property_id for r in first]
    assert ids == ["catalog_counts", "block_maximum", "product_maximum", "bounds",
                   "core_invariance", "hom_invariance", "hom_invariance"]


def test_unknown_suite():
    with pytest.raises(KeyError):
        verify.run_suite("nope")


def test_parallel_matches_serial():
    graphs = [g for n in range(1, 6) for g in verify.connected_catalog(n)]
    serial = verify.check_block_maximum(graphs, seed=0)
    parallel = verify.check_block_maximum(graphs, seed=0, workers=2)
    assert (serial.instances, serial.passed) == (parallel.instances, parallel.passed)


def test_hom_check_counts_skips():
    report = verify.check_hom_invariance([(complete(3), complete(2)), (complete(2), complete(3))])
    assert report.skipped == 1 and report.instances == 1 and report.passed


def test_broken_driver_is_caught_and_replayable(monkeypatch):
    def wrong(g, **kwargs):
        return AltitudeResult(g.n, CircularOrdering.identity(g.n), "broken")

    monkeypatch.setattr(verify, "altitude", wrong)
    report = verify.check_block_maximum([cycle(5), complete(3)], seed=9)
    assert not report.passed
    assert report.instances == 2 and len(report.failures) == 1
    failure = report.failures[0]
    (g,) = verify.replay(failure)
    assert g == cycle(5) and is_connected(g)
    assert failure.observed == {"oracle": 2, "block_max": 2, "driver": 5}
    payload = json.loads(report.to_json())
    assert payload["passed"] is False and payload["seed"] == 9
    assert "FAIL" in report.to_text()


def test_kernel_and_symmetry_checks():
    items = list(verify.random_ordered_graphs(50, seed=1))
    assert all(6 <= g.n <= 8 for g, _ in items)
    assert verify.check_kernel_oracle(items).passed
    assert verify.check_ordering_symmetries([cycle(4), complete(3)]).passed
