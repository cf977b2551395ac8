import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circalt.graph import Graph, complete, cycle, empty
from circalt.monotonic import (
    CircularOrdering,
    MonotonicCycleWitness,
    enumerate_monotonic_cycles,
    is_monotonic_cycle,
    max_monotonic_cycle,
    ordering_value,
)

from oracles import brute_cycle_length
from test_graph import graphs


@st.composite
def graph_and_ordering(draw, max_n=8):
    g = draw(graphs(max_n=max_n))
    return g, tuple(draw(st.permutations(range(g.n))))


def test_ordering_validation():
    with pytest.raises(ValueError):
        CircularOrdering((0, 0, 1))
    with pytest.raises(ValueError):
        max_monotonic_cycle(cycle(4), [0, 1, 2])
    order = CircularOrdering((2, 0, 3, 1))
    assert order.position == (1, 3, 0, 2)
    assert order.rotate(1).seq == (0, 3, 1, 2)
    assert order.anchored(0).seq == (0, 3, 1, 2)
    assert order.reversed().seq == (2, 1, 3, 0)


def test_single_vertex():
    assert max_monotonic_cycle(complete(1), [0]) == MonotonicCycleWitness(1, (0,))


def test_complete_graph_full_cycle():
    for n in range(2, 7):
        for seq in itertools.permutations(range(n)):
            w = max_monotonic_cycle(complete(n), seq)
            assert w.length == n
            assert w.vertices == seq


def test_c4_orderings():
    # cycle edges 01, 12, 23, 30
    assert max_monotonic_cycle(cycle(4), [0, 2, 1, 3]).length == 2
    assert max_monotonic_cycle(cycle(4), [0, 1, 2, 3]) == MonotonicCycleWitness(4, (0, 1, 2, 3))


def test_witness_tie_break_is_lexicographic_by_position():
    # positions 0..3; edges 01 and 23 only: two length-2 cycles, smallest first
    g = Graph.from_edges(4, [(2, 3), (0, 1)])
    assert max_monotonic_cycle(g, [0, 1, 2, 3]).vertices == (0, 1)
    assert max_monotonic_cycle(g, [3, 2, 1, 0]).vertices == (3, 2)
    # two triangles 0-1-3 and 0-2-3 in identity order: 0,1,3 beats 0,2,3
    g = Graph.from_edges(4, [(0, 1), (1, 3), (0, 3), (0, 2), (2, 3)])
    assert max_monotonic_cycle(g, [0, 1, 2, 3]).vertices == (0, 1, 3)


def test_enumeration_examples():
    assert len(enumerate_monotonic_cycles(complete(3), [2, 0, 1], 3)) == 1
    assert enumerate_monotonic_cycles(complete(3), [2, 0, 1], 3)[0].vertices == (2, 0, 1)
    assert enumerate_monotonic_cycles(empty(4), [0, 1, 2, 3], 2) == []
    found = enumerate_monotonic_cycles(cycle(5), [0, 1, 2, 3, 4], 5)
    assert found == [MonotonicCycleWitness(5, (0, 1, 2, 3, 4))]
    with pytest.raises(ValueError):
        enumerate_monotonic_cycles(empty(17), list(range(17)))


@settings(max_examples=400)
@given(graph_and_ordering())
def test_kernel_matches_enumeration(item):
    g, seq = item
    w = max_monotonic_cycle(g, seq)
    cycles = enumerate_monotonic_cycles(g, seq, 1)
    assert w.length == max(c.length for c in cycles)
    assert w.length == brute_cycle_length(g, seq)
    assert ordering_value(g, seq) == w.length
    assert is_monotonic_cycle(g, seq, w.vertices)
    assert (w.length >= 2) == (g.num_edges > 0)
    pos = CircularOrdering(seq).position
    best = min(tuple(pos[v] for v in c.vertices) for c in cycles if c.length == w.length)
    assert tuple(pos[v] for v in w.vertices) == best


@settings(max_examples=200)
@given(graph_and_ordering(), st.integers(1, 9))
def test_stop_at_is_a_threshold(item, stop_at):
    g, seq = item
    exact = ordering_value(g, seq)
    early = ordering_value(g, seq, stop_at=stop_at)
    if exact < stop_at:
        assert early == exact
    else:
        assert stop_at <= early <= exact


def test_every_enumerated_cycle_is_valid():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (1, 4)])
    for seq in [(0, 1, 2, 3, 4, 5), (5, 3, 1, 0, 4, 2)]:
        for c in enumerate_monotonic_cycles(g, seq):
            assert is_monotonic_cycle(g, seq, c.vertices)


@settings(max_examples=150)
@given(graph_and_ordering(max_n=7))
def test_rotation_and_reversal_invariance(item):
    g, seq = item
    order = CircularOrdering(seq)
    value = ordering_value(g, seq)
    for k in range(g.n):
        assert ordering_value(g, order.rotate(k).seq) == value
    assert ordering_value(g, order.reversed().seq) == value
    assert ordering_value(g, seq[::-1]) == value


@settings(max_examples=150)
@given(graph_and_ordering(max_n=7), st.data())
def test_adding_an_edge_never_decreases(item, data):
    g, seq = item
    missing = [(i, j) for i in range(g.n) for j in range(i + 1, g.n) if not g.has_edge(i, j)]
    if not missing:
        return
    u, v = data.draw(st.sampled_from(missing))
    assert ordering_value(g.add_edge(u, v), seq) >= ordering_value(g, seq)
