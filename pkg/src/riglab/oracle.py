"""Exact enumeration and brute-force ground truth for small instances.

Probabilities here are exact :class:`fractions.Fraction` values; nothing in
this module goes through floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from .core import Graph, IntervalFamily, graph_from_intervals_naive, has_universal_vertex

__all__ = [
    "MAX_ENUM_N",
    "ExactDistribution",
    "double_factorial",
    "enumerate_matchings",
    "exact_distribution",
    "exact_prob_universal",
    "exact_edge_count_distribution",
    "brute_clique",
    "brute_independence",
    "brute_chromatic",
]

MAX_ENUM_N = 7
MAX_BRUTE_N = 20
MAX_CHROMATIC_N = 12


def double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


@dataclass(frozen=True)
class ExactDistribution:
    outcomes: dict[int, Fraction]

    def __post_init__(self) -> None:
        if sum(self.outcomes.values(), Fraction(0)) != 1:
            raise ValueError("probabilities must sum to exactly 1")

    @property
    def mean(self) -> Fraction:
        return sum((k * p for k, p in self.outcomes.items()), Fraction(0))

    @property
    def variance(self) -> Fraction:
        m = self.mean
        return sum(((k - m) ** 2 * p for k, p in self.outcomes.items()), Fraction(0))

    def prob(self, k: int) -> Fraction:
        return self.outcomes.get(k, Fraction(0))


def _guard(n: int) -> None:
    if not 1 <= n <= MAX_ENUM_N:
        raise ValueError(f"exact enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")


def _pairings(free: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not free:
        yield []
        return
    first, rest = free[0], free[1:]
    for i, partner in enumerate(rest):
        for tail in _pairings(rest[:i] + rest[i + 1:]):
            yield [(first, partner)] + tail


def enumerate_matchings(n: int) -> Iterator[IntervalFamily]:
    """Every perfect matching of ``1..2n`` as an interval family.

    Canonical order: the smallest free endpoint is matched first, its
    partner running upwards. Yields ``(2n-1)!!`` families.
    """
    _guard(n)
    for pairing in _pairings(list(range(1, 2 * n + 1))):
        yield IntervalFamily(pairing, model="matching", params={"n": n})


def exact_distribution(n: int, statistic: Callable[[IntervalFamily], int]) -> ExactDistribution:
    counts: dict[int, int] = {}
    total = 0
    for fam in enumerate_matchings(n):
        k = int(statistic(fam))
        counts[k] = counts.get(k, 0) + 1
        total += 1
    return ExactDistribution({k: Fraction(c, total) for k, c in sorted(counts.items())})


def exact_prob_universal(n: int) -> Fraction:
    """Exact probability that the random interval graph has a vertex of degree n-1."""
    _guard(n)
    hits = total = 0
    for fam in enumerate_matchings(n):
        hits += has_universal_vertex(graph_from_intervals_naive(fam))
        total += 1
    return Fraction(hits, total)


def exact_edge_count_distribution(n: int) -> ExactDistribution:
    _guard(n)
    return exact_distribution(n, lambda fam: graph_from_intervals_naive(fam).edge_count)


def _masks(g: Graph) -> list[int]:
    adj = g.adjacency()
    return [sum(1 << j for j in range(g.n) if adj[i, j]) for i in range(g.n)]


def _max_clique(masks: list[int]) -> int:
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        if size + bin(cand).count("1") <= best:
            return
        while cand:
            if size + bin(cand).count("1") <= best:
                return
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            expand(size + 1, cand & masks[v])

    expand(0, (1 << len(masks)) - 1)
    return best


def brute_clique(g: Graph) -> int:
    """Exact clique number by branch and bound over vertex subsets."""
    if g.n > MAX_BRUTE_N:
        raise ValueError(f"brute_clique is limited to n <= {MAX_BRUTE_N}")
    return _max_clique(_masks(g))


def brute_independence(g: Graph) -> int:
    """Exact independence number (clique number of the complement)."""
    if g.n > MAX_BRUTE_N:
        raise ValueError(f"brute_independence is limited to n <= {MAX_BRUTE_N}")
    full = (1 << g.n) - 1
    comp = [(full & ~m) & ~(1 << i) for i, m in enumerate(_masks(g))]
    return _max_clique(comp)


def _colorable(masks: list[int], k: int) -> bool:
    n = len(masks)
    order = sorted(range(n), key=lambda v: -bin(masks[v]).count("1"))
    colors = [-1] * n

    def place(idx: int, used: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        taken = {colors[u] for u in range(n) if masks[v] >> u & 1 and colors[u] >= 0}
        # a fresh colour is symmetric to any other fresh one: try only the first
        for c in range(min(k, used + 1)):
            if c not in taken:
                colors[v] = c
                if place(idx + 1, max(used, c + 1)):
                    return True
                colors[v] = -1
        return False

    return place(0, 0)


def brute_chromatic(g: Graph) -> int:
    """Exact chromatic number, trying k = 1, 2, ... colours in turn."""
    if g.n > MAX_CHROMATIC_N:
        raise ValueError(f"brute_chromatic is limited to n <= {MAX_CHROMATIC_N}")
    if g.n == 0:
        return 0
    masks = _masks(g)
    for k in range(1, g.n + 1):
        if _colorable(masks, k):
            return k
    return g.n
