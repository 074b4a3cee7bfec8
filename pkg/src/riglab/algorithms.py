"""Interval-graph invariants and generic graph statistics.

The interval routines take an :class:`IntervalFamily` and run in
O(n log n); the graph routines take a :class:`Graph`.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Any, NamedTuple

import numpy as np

from .core import Graph, IntervalFamily, graph_from_intervals

__all__ = [
    "SweepEvent",
    "ChainResult",
    "sweep_events",
    "clique_number",
    "count_containing",
    "independence_number",
    "chromatic_number",
    "greedy_coloring",
    "interval_degrees",
    "interval_edge_count",
    "interval_has_universal",
    "interval_diameter",
    "diameter",
    "connected_components",
    "component_diameter",
    "graph_stats",
]

OPEN, CLOSE = 0, 1


class SweepEvent(NamedTuple):
    coordinate: float
    kind: int
    vertex: int


@dataclass(frozen=True)
class ChainResult:
    vertices: list[int]

    @property
    def size(self) -> int:
        return len(self.vertices)


def sweep_events(f: IntervalFamily) -> list[SweepEvent]:
    """All ``2n`` endpoint events, opens before closes at equal coordinates."""
    ev = [SweepEvent(float(a), OPEN, i) for i, a in enumerate(f.lo)]
    ev += [SweepEvent(float(b), CLOSE, i) for i, b in enumerate(f.hi)]
    ev.sort()
    return ev


def _load_profile(lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    n = len(lo)
    coords = np.concatenate([lo, hi])
    kinds = np.concatenate([np.zeros(n, np.int8), np.ones(n, np.int8)])
    order = np.lexsort((kinds, coords))
    steps = np.where(kinds[order] == OPEN, 1, -1)
    return np.cumsum(steps)


def clique_number(f: IntervalFamily) -> int:
    """Largest number of intervals sharing a point (equal to omega by Helly)."""
    if f.n == 0:
        raise ValueError("clique number of an empty family is undefined")
    return int(_load_profile(f.lo, f.hi).max())


def count_containing(f: IntervalFamily, x: float) -> int:
    return int(np.count_nonzero((f.lo <= x) & (x <= f.hi)))


def independence_number(f: IntervalFamily) -> ChainResult:
    """Longest chain in the interval order, built by earliest finishing time.

    Each step takes, among intervals starting strictly after the last chosen
    right endpoint, the one with the smallest right endpoint. This chain is a
    maximum independent set of the interval graph.
    """
    if f.n == 0:
        raise ValueError("independence number of an empty family is undefined")
    order = np.argsort(f.hi, kind="stable")
    lo = f.lo[order].tolist()
    hi = f.hi[order].tolist()
    chain = []
    last = -np.inf
    for k, (a, b) in enumerate(zip(lo, hi)):
        if a > last:
            chain.append(int(order[k]))
            last = b
    return ChainResult(chain)


def greedy_coloring(f: IntervalFamily) -> np.ndarray:
    """Colours ``0, 1, ...`` assigned in increasing left-endpoint order,
    each interval taking the least colour not used by an active interval."""
    n = f.n
    order = np.lexsort((f.hi, f.lo))
    colors = np.empty(n, dtype=np.int64)
    active: list[tuple[float, int]] = []  # (hi, colour)
    free: list[int] = []
    used = 0
    lo = f.lo.tolist()
    hi = f.hi.tolist()
    for v in order.tolist():
        a = lo[v]
        while active and active[0][0] < a:
            heapq.heappush(free, heapq.heappop(active)[1])
        if free:
            c = heapq.heappop(free)
        else:
            c = used
            used += 1
        colors[v] = c
        heapq.heappush(active, (hi[v], c))
    return colors


def chromatic_number(f: IntervalFamily, check: bool = True) -> int:
    """Colour count of :func:`greedy_coloring`.

    With ``check`` the result is compared against :func:`clique_number`;
    interval graphs are perfect, so a mismatch means a bug.
    """
    if f.n == 0:
        raise ValueError("chromatic number of an empty family is undefined")
    chi = int(greedy_coloring(f).max()) + 1
    if check:
        omega = clique_number(f)
        if chi != omega:
            raise RuntimeError(f"internal consistency failure: greedy chi={chi} != omega={omega}")
    return chi


def interval_degrees(f: IntervalFamily) -> np.ndarray:
    """Vertex degrees without building the graph, O(n log n).

    Interval ``i`` misses ``j`` iff ``hi_j < lo_i`` or ``lo_j > hi_i``.
    """
    return _degrees(f.lo, f.hi)


def _degrees(lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    n = len(lo)
    left = np.searchsorted(np.sort(hi), lo, side="left")
    right = n - np.searchsorted(np.sort(lo), hi, side="right")
    return n - 1 - left - right


def interval_edge_count(f: IntervalFamily) -> int:
    return _edge_count(f.lo, f.hi)


def _edge_count(lo: np.ndarray, hi: np.ndarray) -> int:
    n = len(lo)
    disjoint = int(np.searchsorted(np.sort(hi), lo, side="left").sum())
    return n * (n - 1) // 2 - disjoint


def interval_has_universal(f: IntervalFamily) -> bool:
    """Some interval meets all others iff it reaches both the smallest right
    endpoint and the largest left endpoint."""
    return bool(np.any((f.lo <= f.hi.min()) & (f.hi >= f.lo.max())))


def interval_diameter(f: IntervalFamily) -> int | None:
    """Exact diameter of the interval graph in O(n log n); ``None`` if disconnected.

    The farthest pair is the interval with the smallest right endpoint and
    the one with the largest left endpoint; their distance follows from
    repeatedly jumping to the furthest right endpoint reachable.
    """
    return _interval_diameter(f.lo, f.hi)


def _interval_diameter(lo: np.ndarray, hi: np.ndarray) -> int | None:
    n = len(lo)
    if n <= 1:
        return 0
    reach = float(hi.min())
    target = float(lo.max())
    if reach >= target:
        return 1
    order = np.argsort(lo, kind="stable")
    lo_sorted = lo[order]
    best_hi = np.maximum.accumulate(hi[order])
    steps = 0
    while reach < target:
        k = int(np.searchsorted(lo_sorted, reach, side="right")) - 1
        nxt = float(best_hi[k])
        if nxt <= reach:
            return None
        reach = nxt
        steps += 1
    return steps + 1


def _reachability_levels(adj: np.ndarray) -> tuple[int, np.ndarray]:
    n = adj.shape[0]
    a = adj.astype(np.float32)
    reach = np.eye(n, dtype=bool)
    levels = 0
    while True:
        nxt = reach | ((reach.astype(np.float32) @ a) > 0)
        if np.array_equal(nxt, reach):
            return levels, reach
        reach = nxt
        levels += 1


def diameter(g: Graph) -> int | None:
    """Largest BFS distance over all pairs; ``None`` if the graph is disconnected.

    All sources are expanded together, one level per boolean matrix product.
    """
    if g.n == 0:
        raise ValueError("diameter of an empty graph is undefined")
    levels, reach = _reachability_levels(g.adjacency())
    if not reach.all():
        return None
    return levels


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by smallest vertex."""
    adj = g.adjacency()
    seen = np.zeros(g.n, dtype=bool)
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = np.zeros(g.n, dtype=bool)
        comp[s] = True
        frontier = comp.copy()
        while frontier.any():
            frontier = adj[frontier].any(axis=0) & ~comp
            comp |= frontier
        seen |= comp
        comps.append(np.flatnonzero(comp).tolist())
    return comps


def component_diameter(g: Graph, vertices: list[int]) -> int:
    sub = g.adjacency()[np.ix_(vertices, vertices)]
    levels, _ = _reachability_levels(sub)
    return levels


def graph_stats(obj: IntervalFamily | Graph, with_diameter: bool = False) -> dict[str, Any]:
    """Summary statistics as a JSON-ready dict.

    Clique, colouring and independence numbers are only filled in for
    interval families (``None`` for a bare graph).
    """
    if isinstance(obj, IntervalFamily):
        g = graph_from_intervals(obj)
        omega = clique_number(obj) if obj.n else None
        chi = chromatic_number(obj) if obj.n else None
        alpha = independence_number(obj).size if obj.n else None
    else:
        g = obj
        omega = chi = alpha = None
    d = g.degrees()
    out: dict[str, Any] = {
        "n": g.n,
        "edges": g.edge_count,
        "delta": int(d.min()) if g.n else 0,
        "Delta": int(d.max()) if g.n else 0,
        "omega": omega,
        "chi": chi,
        "alpha": alpha,
        "diameter": diameter(g) if (with_diameter and g.n) else None,
        "components": len(connected_components(g)),
    }
    return out
