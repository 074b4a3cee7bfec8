"""Seeded generators for the random graph models.

Every generator is a pure function of its parameters and an :class:`RngSeed`.
Draw layouts (positions in the trial's stream):

* scheinerman: ``X_1, Y_1, X_2, Y_2, ...`` at draws ``0 .. 2n-1``.
* matching: draw ``i`` picks the partner of the smallest free endpoint at
  step ``i`` (``0 <= i < n``).
* prisner: draw ``i`` is the left endpoint of interval ``i``.
* gnp: draw ``k`` decides the ``k``-th pair ``(i, j)``, ``i < j``, in
  lexicographic order.
* threshold: draw ``v`` is the weight of vertex ``v``.
* dotprod: draws ``0 .. n-1`` are the latent positions, then one draw per
  pair in lexicographic order.

The ``*_batch`` functions produce many trials at once from an array of
streams; the single-family functions call them with one stream, so both
paths give identical output.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from . import rng
from .core import Graph, IntervalFamily

__all__ = [
    "RngSeed",
    "MODELS",
    "INTERVAL_MODELS",
    "as_seed",
    "gen_scheinerman",
    "gen_matching",
    "gen_prisner",
    "gen_gnp",
    "gen_threshold",
    "gen_dot_product",
    "generate",
    "scheinerman_batch",
    "matching_batch",
    "prisner_batch",
    "gnp_adjacency",
    "threshold_adjacency",
    "dot_product_adjacency",
    "first_tied_trial",
]

MODELS = ("scheinerman", "matching", "prisner", "gnp", "dotprod", "threshold")
INTERVAL_MODELS = ("scheinerman", "matching", "prisner")


@dataclass(frozen=True)
class RngSeed:
    master: int
    stream: int

    @classmethod
    def from_master(cls, master: int, trial: int = 0) -> "RngSeed":
        return cls(int(master), rng.derive_stream(int(master), int(trial)))


SeedLike = Union[RngSeed, int]


def as_seed(seed: SeedLike) -> RngSeed:
    if isinstance(seed, RngSeed):
        return seed
    return RngSeed.from_master(int(seed))


def _check_n(n: int) -> None:
    if int(n) != n or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def _streams(seed: RngSeed) -> np.ndarray:
    return np.array([seed.stream], dtype=np.uint64)


# -- batched samplers ------------------------------------------------------

def scheinerman_batch(n: int, streams: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Endpoints of uniform random intervals, arrays of shape ``(T, n)``."""
    u = rng.uniforms(streams, 2 * n)
    x, y = u[:, 0::2], u[:, 1::2]
    return np.minimum(x, y), np.maximum(x, y)


def matching_batch(n: int, streams: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Uniform perfect matchings of ``1..2n`` by sequential pairing.

    Interval ``i`` pairs the smallest endpoint still free at step ``i`` with a
    uniformly chosen other free endpoint. Returns int arrays ``(T, n)``.
    """
    streams = np.atleast_1d(np.asarray(streams, dtype=np.uint64))
    t = len(streams)
    u = rng.uniforms(streams, n)
    rows = np.arange(t)
    free = np.tile(np.arange(1, 2 * n + 1, dtype=np.int64), (t, 1))
    lo = np.empty((t, n), dtype=np.int64)
    hi = np.empty((t, n), dtype=np.int64)
    for i in range(n):
        k = free.shape[1]
        j = 1 + np.floor(u[:, i] * (k - 1)).astype(np.int64)
        lo[:, i] = free[:, 0]
        hi[:, i] = free[rows, j]
        keep = np.ones((t, k), dtype=bool)
        keep[:, 0] = False
        keep[rows, j] = False
        free = free[keep].reshape(t, k - 2)
    return lo, hi


def prisner_batch(n: int, m: float, streams: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Unit intervals with left endpoints uniform on ``[0, m - 1]``."""
    hi = rng.uniforms(streams, n) * (m - 1.0) + 1.0
    # hi - 1 is exact for hi >= 1, which makes hi - lo == 1 exactly
    return hi - 1.0, hi


def first_tied_trial(lo: np.ndarray, hi: np.ndarray) -> int:
    """Index of the first trial (row) with a repeated endpoint, or -1."""
    ends = np.sort(np.concatenate([lo, hi], axis=1), axis=1)
    bad = np.flatnonzero((ends[:, 1:] == ends[:, :-1]).any(axis=1))
    return int(bad[0]) if bad.size else -1


def _pair_matrix(n: int, values: np.ndarray) -> np.ndarray:
    a = np.zeros((n, n), dtype=bool)
    iu = np.triu_indices(n, k=1)
    a[iu] = values
    return a | a.T


def gnp_adjacency(n: int, p: float, stream: int) -> np.ndarray:
    u = rng.uniforms(np.array([stream], dtype=np.uint64), n * (n - 1) // 2)[0]
    return _pair_matrix(n, u < p)


def threshold_adjacency(n: int, stream: int) -> tuple[np.ndarray, np.ndarray]:
    x = rng.uniforms(np.array([stream], dtype=np.uint64), n)[0]
    a = np.add.outer(x, x) >= 1.0
    np.fill_diagonal(a, False)
    return a, x


def dot_product_adjacency(n: int, r: float, stream: int) -> tuple[np.ndarray, np.ndarray]:
    s = np.array([stream], dtype=np.uint64)
    x = rng.uniforms(s, n)[0]
    u = rng.uniforms(s, n * (n - 1) // 2, offset=n)[0]
    i, j = np.triu_indices(n, k=1)
    prob = (x[i] * x[j]) ** r
    return _pair_matrix(n, u < prob), x


# -- single-instance generators -------------------------------------------

def gen_scheinerman(n: int, seed: SeedLike) -> IntervalFamily:
    _check_n(n)
    s = as_seed(seed)
    lo, hi = scheinerman_batch(n, _streams(s))
    return IntervalFamily(model="scheinerman", params={"n": n}, seed=s.master, lo=lo[0], hi=hi[0])


def gen_matching(n: int, seed: SeedLike) -> IntervalFamily:
    _check_n(n)
    s = as_seed(seed)
    lo, hi = matching_batch(n, _streams(s))
    return IntervalFamily(model="matching", params={"n": n}, seed=s.master, lo=lo[0], hi=hi[0])


def gen_prisner(n: int, m: float, seed: SeedLike) -> IntervalFamily:
    _check_n(n)
    if not (math.isfinite(m) and m >= 1.0):
        raise ValueError(f"Prisner window length m must be >= 1, got {m!r}")
    s = as_seed(seed)
    lo, hi = prisner_batch(n, m, _streams(s))
    # m == 1 forces every interval to [0, 1]
    return IntervalFamily(
        model="prisner", params={"n": n, "m": m}, seed=s.master,
        lo=lo[0], hi=hi[0], allow_ties=(m == 1.0),
    )


def gen_gnp(n: int, p: float, seed: SeedLike) -> Graph:
    _check_n(n)
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p!r}")
    return Graph.from_adjacency(gnp_adjacency(n, p, as_seed(seed).stream))


def gen_threshold(n: int, seed: SeedLike) -> Graph:
    _check_n(n)
    a, x = threshold_adjacency(n, as_seed(seed).stream)
    return Graph.from_adjacency(a, latent=x)


def gen_dot_product(n: int, r: float, seed: SeedLike, d: int = 1) -> Graph:
    """1-D random dot-product graph with link function ``t**r``.

    The latent positions are kept on ``graph.latent``.
    """
    _check_n(n)
    if d != 1:
        raise ValueError("only latent dimension d = 1 is supported")
    if not (math.isfinite(r) and r >= 0.0):
        raise ValueError(f"exponent r must be >= 0, got {r!r}")
    a, x = dot_product_adjacency(n, r, as_seed(seed).stream)
    return Graph.from_adjacency(a, latent=x)


def generate(model: str, n: int, seed: SeedLike, **params: float) -> IntervalFamily | Graph:
    """Dispatch by model name. Interval models return an :class:`IntervalFamily`."""
    if model == "scheinerman":
        return gen_scheinerman(n, seed)
    if model == "matching":
        return gen_matching(n, seed)
    if model == "prisner":
        return gen_prisner(n, params.get("m", 1.0), seed)
    if model == "gnp":
        return gen_gnp(n, params.get("p", 2.0 / 3.0), seed)
    if model == "threshold":
        return gen_threshold(n, seed)
    if model == "dotprod":
        return gen_dot_product(n, params.get("r", 1.0), seed)
    raise ValueError(f"unknown model {model!r}; expected one of {', '.join(MODELS)}")
