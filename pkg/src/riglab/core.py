"""Intervals, interval families, simple graphs and their JSON forms.

Intervals are closed: two intervals sharing only an endpoint intersect.
Graphs keep their adjacency as packed bit rows (``numpy.packbits`` with
little bit order), one row per vertex.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Interval",
    "IntervalFamily",
    "Graph",
    "DegreeSummary",
    "make_interval",
    "intervals_intersect",
    "interval_precedes",
    "radius",
    "graph_from_intervals",
    "graph_from_intervals_naive",
    "degree_summary",
    "has_universal_vertex",
]


@dataclass(frozen=True)
class Interval:
    """Closed interval ``[lo, hi]``; the constructor orders the endpoints."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        a, b = float(self.lo), float(self.hi)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise ValueError(f"interval endpoints must be finite, got ({self.lo}, {self.hi})")
        if b < a:
            a, b = b, a
        object.__setattr__(self, "lo", a)
        object.__setattr__(self, "hi", b)

    def __iter__(self) -> Iterator[float]:
        yield self.lo
        yield self.hi


def make_interval(a: float, b: float) -> Interval:
    return Interval(a, b)


def intervals_intersect(I: Interval, J: Interval) -> bool:
    return max(I.lo, J.lo) <= min(I.hi, J.hi)


def interval_precedes(I: Interval, J: Interval) -> bool:
    """True iff ``I`` lies strictly to the left of ``J`` (interval order)."""
    return I.hi < J.lo


def radius(I: Interval) -> float:
    """Distance from ``(lo, hi)`` to the corner ``(0, 1)`` of the unit square.

    The squared radius is the probability that a uniform random interval
    misses ``I``.
    """
    if I.lo < 0.0 or I.hi > 1.0:
        raise ValueError(f"radius is defined for intervals inside [0, 1], got [{I.lo}, {I.hi}]")
    return math.hypot(I.lo, 1.0 - I.hi)


class IntervalFamily:
    """An ordered family of closed intervals with its provenance.

    Endpoints are held as two read-only float arrays. Unless ``allow_ties``
    is set, all ``2n`` endpoints must be distinct.
    """

    __slots__ = ("lo", "hi", "model", "params", "seed")

    def __init__(
        self,
        intervals: Iterable[Interval | Sequence[float]] | None = None,
        model: str = "custom",
        params: dict[str, Any] | None = None,
        seed: int = 0,
        *,
        lo: np.ndarray | None = None,
        hi: np.ndarray | None = None,
        allow_ties: bool = False,
    ) -> None:
        if intervals is not None:
            pairs = [tuple(Interval(*iv)) for iv in intervals]
            a = np.array([p[0] for p in pairs], dtype=np.float64)
            b = np.array([p[1] for p in pairs], dtype=np.float64)
        else:
            if lo is None or hi is None:
                raise ValueError("give either intervals or lo/hi arrays")
            a = np.array(lo, dtype=np.float64)
            b = np.array(hi, dtype=np.float64)
            if a.shape != b.shape or a.ndim != 1:
                raise ValueError("lo and hi must be 1-D arrays of equal length")
            if not (np.isfinite(a).all() and np.isfinite(b).all()):
                raise ValueError("interval endpoints must be finite")
            a, b = np.minimum(a, b), np.maximum(a, b)
        if not allow_ties:
            ends = np.sort(np.concatenate([a, b]))
            dup = np.flatnonzero(ends[1:] == ends[:-1])
            if dup.size:
                raise ValueError(f"duplicate endpoint {ends[dup[0]]!r} in interval family")
        a.flags.writeable = False
        b.flags.writeable = False
        self.lo = a
        self.hi = b
        self.model = model
        self.params = dict(params or {})
        self.seed = int(seed)

    @property
    def n(self) -> int:
        return len(self.lo)

    def __len__(self) -> int:
        return len(self.lo)

    def __getitem__(self, i: int) -> Interval:
        return Interval(self.lo[i], self.hi[i])

    def __iter__(self) -> Iterator[Interval]:
        for i in range(len(self.lo)):
            yield Interval(self.lo[i], self.hi[i])

    @property
    def intervals(self) -> list[Interval]:
        return list(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntervalFamily):
            return NotImplemented
        return (
            self.model == other.model
            and self.params == other.params
            and self.seed == other.seed
            and np.array_equal(self.lo, other.lo)
            and np.array_equal(self.hi, other.hi)
        )

    def __repr__(self) -> str:
        return f"IntervalFamily(n={self.n}, model={self.model!r}, seed={self.seed})"

    def to_dict(self) -> dict[str, Any]:
        return {
            "model": self.model,
            "seed": self.seed,
            "params": self.params,
            "intervals": [[float(a), float(b)] for a, b in zip(self.lo, self.hi)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict[str, Any], allow_ties: bool = True) -> "IntervalFamily":
        ivs = d["intervals"]
        lo = np.array([iv[0] for iv in ivs], dtype=np.float64)
        hi = np.array([iv[1] for iv in ivs], dtype=np.float64)
        return cls(
            model=d.get("model", "custom"),
            params=d.get("params", {}),
            seed=d.get("seed", 0),
            lo=lo,
            hi=hi,
            allow_ties=allow_ties,
        )

    @classmethod
    def from_json(cls, text: str, allow_ties: bool = True) -> "IntervalFamily":
        return cls.from_dict(json.loads(text), allow_ties=allow_ties)


def _popcount_rows(bits: np.ndarray, n: int, chunk: int = 4096) -> np.ndarray:
    out = np.empty(bits.shape[0], dtype=np.int64)
    for start in range(0, bits.shape[0], chunk):
        block = np.unpackbits(bits[start:start + chunk], axis=1, count=n, bitorder="little")
        out[start:start + chunk] = block.sum(axis=1, dtype=np.int64)
    return out


class Graph:
    """Simple undirected graph on vertices ``0..n-1`` stored as bit rows."""

    __slots__ = ("n", "bits", "latent", "_degrees")

    def __init__(self, n: int, bits: np.ndarray, latent: np.ndarray | None = None) -> None:
        self.n = int(n)
        bits = np.ascontiguousarray(bits, dtype=np.uint8)
        if bits.shape != (self.n, (self.n + 7) // 8):
            raise ValueError(f"bit rows have shape {bits.shape}, expected ({self.n}, {(self.n + 7) // 8})")
        bits.flags.writeable = False
        self.bits = bits
        self.latent = latent
        self._degrees: np.ndarray | None = None

    @classmethod
    def from_adjacency(cls, adj: np.ndarray, latent: np.ndarray | None = None) -> "Graph":
        """Build from a dense boolean matrix, symmetrised, diagonal cleared."""
        a = np.asarray(adj, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency must be a square matrix")
        a = a | a.T
        np.fill_diagonal(a, False)
        return cls(a.shape[0], np.packbits(a, axis=1, bitorder="little"), latent)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        e = np.array(list(edges), dtype=np.int64).reshape(-1, 2)
        if e.size and (e.min() < 0 or e.max() >= n):
            raise ValueError("edge endpoint out of range")
        if np.any(e[:, 0] == e[:, 1]):
            raise ValueError("self-loops are not allowed")
        a = np.zeros((n, n), dtype=bool)
        a[e[:, 0], e[:, 1]] = True
        return cls.from_adjacency(a)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, np.zeros((n, (n + 7) // 8), dtype=np.uint8))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_adjacency(np.ones((n, n), dtype=bool))

    def adjacent(self, i: int, j: int) -> bool:
        return bool((self.bits[i, j >> 3] >> (j & 7)) & 1)

    def adjacency(self) -> np.ndarray:
        """Dense boolean adjacency matrix (a fresh copy)."""
        return np.unpackbits(self.bits, axis=1, count=self.n, bitorder="little").astype(bool)

    def neighbors(self, i: int) -> np.ndarray:
        row = np.unpackbits(self.bits[i], count=self.n, bitorder="little")
        return np.flatnonzero(row)

    def degrees(self) -> np.ndarray:
        if self._degrees is None:
            d = _popcount_rows(self.bits, self.n)
            d.flags.writeable = False
            self._degrees = d
        return self._degrees

    @property
    def edge_count(self) -> int:
        return int(self.degrees().sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j`` in lexicographic order."""
        a = np.triu(self.adjacency(), k=1)
        i, j = np.nonzero(a)
        return list(zip(i.tolist(), j.tolist()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.bits, other.bits)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edge_count})"

    def to_dict(self) -> dict[str, Any]:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "Graph":
        return cls.from_edges(int(d["n"]), d["edges"])

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class DegreeSummary:
    degrees: list[int] = field(repr=False)
    min: int
    max: int
    mean: float


def graph_from_intervals(f: IntervalFamily) -> Graph:
    """Intersection graph by an endpoint sweep, O(n log n + |E|).

    Opens are processed before closes at equal coordinates, so touching
    intervals are adjacent.
    """
    n = f.n
    coords = np.concatenate([f.lo, f.hi])
    kinds = np.concatenate([np.zeros(n, dtype=np.int8), np.ones(n, dtype=np.int8)])
    verts = np.concatenate([np.arange(n), np.arange(n)])
    order = np.lexsort((kinds, coords))
    adj = np.zeros((n, n), dtype=bool)
    active: set[int] = set()
    for k, v in zip(kinds[order].tolist(), verts[order].tolist()):
        if k == 0:
            if active:
                adj[v, list(active)] = True
            active.add(v)
        else:
            active.discard(v)
    return Graph.from_adjacency(adj)


def graph_from_intervals_naive(f: IntervalFamily) -> Graph:
    """Reference O(n^2) construction from the pairwise intersection test."""
    lo, hi = f.lo, f.hi
    adj = np.maximum.outer(lo, lo) <= np.minimum.outer(hi, hi)
    return Graph.from_adjacency(adj)


def degree_summary(g: Graph) -> DegreeSummary:
    d = g.degrees()
    if g.n == 0:
        return DegreeSummary([], 0, 0, 0.0)
    return DegreeSummary(d.tolist(), int(d.min()), int(d.max()), float(d.mean()))


def has_universal_vertex(g: Graph) -> bool:
    if g.n == 0:
        raise ValueError("graph has no vertices")
    return int(g.degrees().max()) == g.n - 1
