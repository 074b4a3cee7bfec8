"""Closed-form constants and limit laws for random interval graphs."""
from __future__ import annotations

import io
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "TheoryCurve",
    "edge_probability",
    "expected_edges",
    "edge_count_variance",
    "radius_sq_cdf",
    "degree_cdf_limit",
    "min_degree_cdf_limit",
    "independence_constant",
    "dot_edge_probability",
    "expected_point_cover",
    "tabulate",
    "CURVES",
]


def edge_probability() -> float:
    """Probability that two uniform random intervals intersect."""
    return 2.0 / 3.0


def expected_edges(n: int) -> float:
    if n < 1:
        raise ValueError("n must be >= 1")
    return n * (n - 1) / 3.0


def edge_count_variance(n: int) -> float:
    """Exact variance of the edge count.

    Edge indicators are independent unless the edges share a vertex, and
    two edges at a common vertex have covariance 2/45, so
    ``Var = C(n,2) * 2/9 + n(n-1)(n-2) * 2/45``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return n * (n - 1) / 2 * 2 / 9 + n * (n - 1) * (n - 2) * 2 / 45


def _acos(t: float) -> float:
    return math.acos(min(1.0, max(-1.0, t)))


def radius_sq_cdf(y: float) -> float:
    """P(rho^2 <= y) for a uniform random interval, ``y`` in [0, 1].

    ``rho^2 = a^2 + (1-b)^2`` is the squared distance from ``(a, b)`` to the
    corner ``(0, 1)``; the CDF is the area of the unit square within
    ``sqrt(y)`` of ``(0, 1)`` or ``(1, 0)``.
    """
    if y < 0.0:
        raise ValueError(f"y must be >= 0, got {y!r}")
    if y <= 0.5:
        return y * math.pi / 2.0
    return y * (math.pi / 2.0 - 2.0 * _acos(1.0 / math.sqrt(2.0 * y))) + math.sqrt(2.0 * y - 1.0)


def degree_cdf_limit(x: float) -> float:
    """Limit of P(d(v) <= x n) for a fixed vertex as n grows."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [0, 1], got {x!r}")
    if x >= 0.5:
        return 1.0 - (1.0 - x) * math.pi / 2.0
    return (
        1.0
        - (1.0 - x) * (math.pi / 2.0 - 2.0 * _acos(1.0 / math.sqrt(2.0 - 2.0 * x)))
        - math.sqrt(1.0 - 2.0 * x)
    )


def min_degree_cdf_limit(k: float) -> float:
    """Limit of P(min degree < k sqrt(n)): a Rayleigh CDF."""
    if k < 0.0:
        raise ValueError(f"k must be >= 0, got {k!r}")
    return -math.expm1(-k * k / 2.0)


def independence_constant() -> float:
    """Limit of (independence number) / sqrt(n), equal to 2 / sqrt(pi)."""
    return 2.0 / math.sqrt(math.pi)


def dot_edge_probability(r: float) -> float:
    """Edge probability of the 1-D dot-product graph with link ``t**r``."""
    if r < 0.0:
        raise ValueError(f"r must be >= 0, got {r!r}")
    return (1.0 + r) ** -2


def expected_point_cover(n: int, x: float) -> float:
    """Expected number of ``n`` uniform random intervals containing ``x``."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [0, 1], got {x!r}")
    return n * (2.0 * x - 2.0 * x * x)


@dataclass(frozen=True)
class TheoryCurve:
    name: str
    points: list[tuple[float, float]]

    @property
    def x(self) -> np.ndarray:
        return np.array([p[0] for p in self.points])

    @property
    def F(self) -> np.ndarray:
        return np.array([p[1] for p in self.points])

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("x,F\n")
        for x, f in self.points:
            buf.write(f"{x:.17g},{f:.17g}\n")
        return buf.getvalue()


# name -> (function, domain)
CURVES = {
    "degree-cdf": (degree_cdf_limit, (0.0, 1.0)),
    "radius-cdf": (radius_sq_cdf, (0.0, 1.0)),
    "min-degree-cdf": (min_degree_cdf_limit, (0.0, 6.0)),
}


def tabulate(name: str, k: int) -> TheoryCurve:
    """Evaluate a limit law at ``k`` evenly spaced points of its domain."""
    if name not in CURVES:
        raise ValueError(f"unknown curve {name!r}; expected one of {', '.join(CURVES)}")
    if k < 2:
        raise ValueError("need at least 2 points")
    fn, (a, b) = CURVES[name]
    xs = [a + (b - a) * i / (k - 1) for i in range(k)]
    xs[-1] = b
    return TheoryCurve(name, [(x, fn(x)) for x in xs])
