import json
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from riglab.core import (
    Graph,
    Interval,
    IntervalFamily,
    degree_summary,
    graph_from_intervals,
    graph_from_intervals_naive,
    has_universal_vertex,
    interval_precedes,
    intervals_intersect,
    make_interval,
    radius,
)

from conftest import STAR, families

unit = st.floats(0.0, 1.0, allow_nan=False)


@pytest.mark.parametrize("a,b,expect", [
    (0.3, 0.7, (0.3, 0.7)),
    (0.7, 0.3, (0.3, 0.7)),
    (0.5, 0.5, (0.5, 0.5)),
])
def test_make_interval_orders_endpoints(a, b, expect):
    I = make_interval(a, b)
    assert (I.lo, I.hi) == expect


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_make_interval_rejects_non_finite(bad):
    with pytest.raises(ValueError):
        make_interval(0.1, bad)


@pytest.mark.parametrize("I,J,expect", [
    ((0.1, 0.4), (0.3, 0.9), True),
    ((0.1, 0.2), (0.3, 0.4), False),
    ((0.1, 0.3), (0.3, 0.5), True),  # closed intervals touch
])
def test_intervals_intersect(I, J, expect):
    assert intervals_intersect(make_interval(*I), make_interval(*J)) is expect
    assert intervals_intersect(make_interval(*J), make_interval(*I)) is expect


@pytest.mark.parametrize("I,J,expect", [
    ((0.1, 0.2), (0.3, 0.4), True),
    ((0.1, 0.4), (0.3, 0.9), False),
    ((0.3, 0.4), (0.1, 0.2), False),
])
def test_interval_precedes(I, J, expect):
    assert interval_precedes(make_interval(*I), make_interval(*J)) is expect


@given(unit, unit, unit, unit)
def test_trichotomy(a, b, c, d):
    I, J = make_interval(a, b), make_interval(c, d)
    states = [intervals_intersect(I, J), interval_precedes(I, J), interval_precedes(J, I)]
    assert sum(states) == 1


@pytest.mark.parametrize("I,expect", [
    ((0, 1), 0.0),
    ((0.5, 0.5), math.sqrt(0.5)),
    ((0, 0), 1.0),
])
def test_radius(I, expect):
    assert radius(make_interval(*I)) == pytest.approx(expect, abs=1e-15)


def test_radius_outside_unit_square():
    with pytest.raises(ValueError):
        radius(make_interval(0.5, 2.0))


@given(unit, unit)
def test_radius_squared_is_non_neighbour_probability(a, b):
    # P(random interval misses [a,b]) = a^2 + (1-b)^2 for a <= b
    I = make_interval(a, b)
    assert radius(I) ** 2 == pytest.approx(I.lo ** 2 + (1 - I.hi) ** 2)
    assert 0.0 <= radius(I) <= 1.0 + 1e-12


def test_family_rejects_duplicate_endpoints():
    with pytest.raises(ValueError):
        IntervalFamily([(0.1, 0.5), (0.5, 0.9)])
    f = IntervalFamily([(0.1, 0.5), (0.5, 0.9)], allow_ties=True)
    assert f.n == 2


def test_family_arrays_are_read_only():
    f = IntervalFamily(STAR)
    with pytest.raises(ValueError):
        f.lo[0] = 0.0


def test_family_json_round_trip():
    f = IntervalFamily([(0.25, 0.5), (0.125, 0.75)], model="scheinerman", params={"n": 2}, seed=9)
    d = json.loads(f.to_json())
    assert set(d) == {"model", "seed", "params", "intervals"}
    assert d["intervals"] == [[0.25, 0.5], [0.125, 0.75]]
    assert IntervalFamily.from_json(f.to_json()) == f


@pytest.mark.parametrize("intervals,edges", [
    ([(1, 4), (2, 3)], [(0, 1)]),
    ([(1, 2), (3, 4), (5, 6)], []),
    (STAR, [(0, 1), (0, 2)]),
])
def test_graph_from_intervals_examples(intervals, edges):
    g = graph_from_intervals(IntervalFamily(intervals))
    assert g.edges() == edges
    assert g.edge_count == len(edges)


@given(families(grid=6))
def test_sweep_matches_naive_with_ties(f):
    assert graph_from_intervals(f) == graph_from_intervals_naive(f)


@given(families(max_n=30))
def test_sweep_matches_naive(f):
    assert graph_from_intervals(f) == graph_from_intervals_naive(f)


def test_sweep_matches_naive_on_generated_families():
    from conftest import random_small_families
    for f in random_small_families(1000, 40):
        assert graph_from_intervals(f) == graph_from_intervals_naive(f)


def test_degree_summary_examples():
    s = degree_summary(Graph.empty(3))
    assert s.degrees == [0, 0, 0] and s.min == s.max == 0
    s = degree_summary(Graph.complete(4))
    assert s.min == s.max == 3
    s = degree_summary(graph_from_intervals(IntervalFamily(STAR)))
    assert s.degrees == [2, 1, 1]
    assert s.mean == pytest.approx(4 / 3)


def test_has_universal_vertex_examples():
    assert has_universal_vertex(graph_from_intervals(IntervalFamily(STAR)))
    assert not has_universal_vertex(Graph.empty(2))
    assert has_universal_vertex(Graph.complete(5))
    with pytest.raises(ValueError):
        has_universal_vertex(Graph.empty(0))


def test_graph_from_adjacency_symmetrises():
    a = np.zeros((3, 3), dtype=bool)
    a[0, 1] = a[2, 2] = True
    g = Graph.from_adjacency(a)
    assert g.adjacent(1, 0) and not g.adjacent(2, 2)
    assert g.edges() == [(0, 1)]


@given(st.integers(1, 70), st.data())
def test_graph_edges_round_trip(n, data):
    pairs = data.draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))
    edges = {(min(i, j), max(i, j)) for i, j in pairs if i != j}
    g = Graph.from_edges(n, edges)
    assert g.edges() == sorted(edges)
    adj = g.adjacency()
    assert (adj == adj.T).all() and not adj.diagonal().any()
    assert g.degrees().tolist() == adj.sum(axis=1).tolist()
    assert Graph.from_json(g.to_json()) == g
    for i in range(min(n, 5)):
        assert g.neighbors(i).tolist() == np.flatnonzero(adj[i]).tolist()
