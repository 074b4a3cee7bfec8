import numpy as np
import pytest
from hypothesis import given

from riglab.algorithms import (
    chromatic_number,
    clique_number,
    component_diameter,
    connected_components,
    count_containing,
    diameter,
    graph_stats,
    greedy_coloring,
    independence_number,
    interval_degrees,
    interval_diameter,
    interval_edge_count,
    interval_has_universal,
    sweep_events,
)
from riglab.core import Graph, IntervalFamily, graph_from_intervals, has_universal_vertex, interval_precedes
from riglab.generators import RngSeed, gen_scheinerman, scheinerman_batch
from riglab import rng
from riglab.oracle import brute_chromatic, brute_clique, brute_independence

from conftest import STAR, disjoint, families, nested, random_small_families


def test_clique_examples():
    assert clique_number(disjoint(4)) == 1
    assert clique_number(nested(4)) == 4
    assert clique_number(IntervalFamily(STAR)) == 2
    with pytest.raises(ValueError):
        clique_number(IntervalFamily([]))


def test_sweep_events_open_before_close():
    f = IntervalFamily([(0.1, 0.3), (0.3, 0.5)], allow_ties=True)
    ev = sweep_events(f)
    assert [(e.coordinate, e.kind) for e in ev] == [(0.1, 0), (0.3, 0), (0.3, 1), (0.5, 1)]
    assert clique_number(f) == 2


def test_count_containing_examples():
    assert all(count_containing(disjoint(5), x) <= 1 for x in np.linspace(0, 12, 49))
    f = gen_scheinerman(10_000, 3)
    assert count_containing(f, 0.5) == int(((f.lo <= 0.5) & (f.hi >= 0.5)).sum())


@pytest.mark.parametrize("x", [0.5, 0.25])
def test_count_containing_mean(x):
    lo, hi = scheinerman_batch(10_000, rng.derive_streams(77, 1000))
    mean = ((lo <= x) & (x <= hi)).sum(axis=1).mean() / 10_000
    assert abs(mean - (2 * x - 2 * x * x)) < 0.01


def test_independence_examples():
    assert independence_number(disjoint(4)).size == 4
    assert independence_number(nested(4)).size == 1


def test_chromatic_examples():
    assert chromatic_number(disjoint(5)) == 1
    assert chromatic_number(nested(5)) == 5


def test_small_families_agree_with_brute_force():
    for f in random_small_families(1000, 8, seed=4242):
        g = graph_from_intervals(f)
        assert clique_number(f) == brute_clique(g)
        assert independence_number(f).size == brute_independence(g)
        assert chromatic_number(f) == brute_chromatic(g)


@given(families(max_n=9, grid=8))
def test_invariants_with_ties_agree_with_brute_force(f):
    g = graph_from_intervals(f)
    assert clique_number(f) == brute_clique(g)
    assert independence_number(f).size == brute_independence(g)
    assert chromatic_number(f, check=False) == brute_chromatic(g)


@given(families(max_n=25))
def test_chain_is_independent_and_ordered(f):
    chain = independence_number(f).vertices
    for a, b in zip(chain, chain[1:]):
        assert interval_precedes(f[a], f[b])
    assert clique_number(f) * len(chain) >= f.n


@given(families(max_n=25, grid=10))
def test_greedy_coloring_is_proper(f):
    colors = greedy_coloring(f)
    adj = graph_from_intervals(f).adjacency()
    i, j = np.nonzero(adj)
    assert (colors[i] != colors[j]).all()
    assert colors.max() + 1 == clique_number(f)


@given(families(max_n=30, grid=12))
def test_interval_shortcuts_match_graph(f):
    g = graph_from_intervals(f)
    assert interval_degrees(f).tolist() == g.degrees().tolist()
    assert interval_edge_count(f) == g.edge_count
    assert interval_has_universal(f) == has_universal_vertex(g)
    assert interval_diameter(f) == diameter(g)


@given(families(min_n=2, max_n=30))
def test_diameter_at_most_two_iff_universal(f):
    g = graph_from_intervals(f)
    d = diameter(g)
    if g.edge_count < f.n * (f.n - 1) // 2:
        assert (d is not None and d <= 2) == has_universal_vertex(g)


def test_diameter_examples():
    assert diameter(Graph.complete(5)) == 1
    path = IntervalFamily([(0.0, 0.3), (0.2, 0.6), (0.5, 0.9)])
    assert diameter(graph_from_intervals(path)) == 2
    assert interval_diameter(path) == 2
    assert diameter(graph_from_intervals(IntervalFamily([(0.1, 0.2), (0.3, 0.4)]))) is None
    assert diameter(Graph.empty(1)) == 0


def test_interval_diameter_long_path():
    f = IntervalFamily([(i, i + 1.5) for i in range(10)])
    assert interval_diameter(f) == diameter(graph_from_intervals(f)) == 9


def test_components_examples():
    assert connected_components(Graph.empty(3)) == [[0], [1], [2]]
    assert connected_components(Graph.complete(3)) == [[0, 1, 2]]
    g = Graph.from_edges(4, [(0, 1), (0, 2)])
    assert sorted(len(c) for c in connected_components(g)) == [1, 3]
    assert component_diameter(g, [0, 1, 2]) == 2


def test_graph_stats_examples():
    s = graph_stats(disjoint(4))
    assert (s["omega"], s["alpha"], s["chi"], s["components"]) == (1, 4, 1, 4)
    s = graph_stats(nested(4), with_diameter=True)
    assert (s["omega"], s["alpha"], s["chi"], s["diameter"]) == (4, 1, 4, 1)
    s = graph_stats(Graph.from_edges(3, [(0, 1)]))
    assert s["omega"] is None and s["edges"] == 1 and s["Delta"] == 1


def test_chi_equals_omega_on_large_families():
    for t in range(20):
        f = gen_scheinerman(2000, RngSeed.from_master(9, t))
        assert chromatic_number(f) == clique_number(f)
