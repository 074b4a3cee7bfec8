"""Seeded Monte Carlo experiments checked against the closed-form laws.

Each trial ``t`` of a run draws from its own stream
``derive_trial_seed(master, t)``. Trials are processed in chunks, possibly
on several threads, and per-trial summaries are concatenated in trial
order before any reduction, so a fixed config yields the same report
whatever the scheduling.
"""
from __future__ import annotations

import io
import json
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from statistics import NormalDist
from typing import Any, Callable

import numpy as np

from . import rng, theory
from .algorithms import _degrees, _edge_count, _interval_diameter
from .algorithms import clique_number, component_diameter, connected_components, greedy_coloring
from .core import Graph, IntervalFamily
from .generators import (
    RngSeed,
    dot_product_adjacency,
    first_tied_trial,
    gnp_adjacency,
    matching_batch,
    prisner_batch,
    scheinerman_batch,
)
from .oracle import exact_edge_count_distribution

__all__ = [
    "ExperimentConfig",
    "EstimateWithCI",
    "ExperimentReport",
    "EmpiricalCDF",
    "TrialError",
    "EXPERIMENTS",
    "derive_trial_seed",
    "estimate_proportion",
    "estimate_mean",
    "empirical_cdf",
    "ks_distance",
    "run_experiment",
]

DEFAULT_SAMPLE_CAP = 1_000_000
KS_95 = 1.3581  # asymptotic 95% quantile of the Kolmogorov distribution


class TrialError(RuntimeError):
    """A trial produced an invalid sample (e.g. tied endpoints)."""

    def __init__(self, message: str, trial: int, stream: int) -> None:
        super().__init__(f"{message} (trial {trial}, stream seed {stream})")
        self.trial = trial
        self.stream = stream


def derive_trial_seed(master: int, trial: int) -> RngSeed:
    return RngSeed(int(master), rng.derive_stream(int(master), int(trial)))


# -- estimators ------------------------------------------------------------

@dataclass(frozen=True)
class EstimateWithCI:
    point: float
    ci_low: float
    ci_high: float
    level: float
    trials: int

    def to_dict(self) -> dict[str, float]:
        return {"point": self.point, "ci_low": self.ci_low, "ci_high": self.ci_high, "level": self.level}


def _z(level: float) -> float:
    if not 0.0 < level < 1.0:
        raise ValueError(f"confidence level must lie in (0, 1), got {level!r}")
    return NormalDist().inv_cdf(0.5 + level / 2.0)


def estimate_proportion(successes: int, trials: int, level: float = 0.95) -> EstimateWithCI:
    """Wilson score interval for a binomial proportion."""
    if trials <= 0:
        raise ValueError("need at least one trial")
    if not 0 <= successes <= trials:
        raise ValueError("successes must lie in [0, trials]")
    z = _z(level)
    p = successes / trials
    z2n = z * z / trials
    center = (p + z2n / 2.0) / (1.0 + z2n)
    half = z / (1.0 + z2n) * math.sqrt(p * (1.0 - p) / trials + z2n / (4.0 * trials))
    low = 0.0 if successes == 0 else max(0.0, min(p, center - half))
    high = 1.0 if successes == trials else min(1.0, max(p, center + half))
    return EstimateWithCI(p, low, high, level, trials)


def estimate_mean(values: np.ndarray, level: float = 0.95) -> EstimateWithCI:
    """Sample mean with a normal-approximation interval."""
    v = np.asarray(values, dtype=np.float64)
    m = float(v.mean())
    se = float(v.std(ddof=1) / math.sqrt(len(v))) if len(v) > 1 else 0.0
    half = _z(level) * se
    return EstimateWithCI(m, m - half, m + half, level, len(v))


def _newcombe(a: EstimateWithCI, b: EstimateWithCI) -> tuple[float, float, float]:
    """Difference ``a - b`` of two proportions with Newcombe's hybrid interval."""
    d = a.point - b.point
    low = d - math.hypot(a.point - a.ci_low, b.ci_high - b.point)
    high = d + math.hypot(a.ci_high - a.point, b.point - b.ci_low)
    return d, low, high


class EmpiricalCDF:
    """Right-continuous step CDF of a sample."""

    def __init__(self, values) -> None:
        v = np.sort(np.asarray(values, dtype=np.float64).ravel())
        if v.size == 0:
            raise ValueError("empirical CDF of an empty sample")
        v.flags.writeable = False
        self.values = v

    def __len__(self) -> int:
        return len(self.values)

    def __call__(self, x):
        r = np.searchsorted(self.values, x, side="right") / len(self.values)
        return float(r) if np.ndim(r) == 0 else r

    def left(self, x):
        """Left limit ``F(x-)``."""
        r = np.searchsorted(self.values, x, side="left") / len(self.values)
        return float(r) if np.ndim(r) == 0 else r

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EmpiricalCDF):
            return NotImplemented
        return np.array_equal(self.values, other.values)


def empirical_cdf(values) -> EmpiricalCDF:
    return EmpiricalCDF(values)


def ks_distance(
    ecdf: EmpiricalCDF,
    cdf: Callable[[float], float],
    grid: int = 0,
    domain: tuple[float, float] | None = None,
) -> float:
    """Sup-norm distance between an empirical CDF and ``cdf``.

    Checked at every sample point (both one-sided limits) and on ``grid``
    evenly spaced points over ``domain`` (the sample range by default).
    """
    f = np.vectorize(cdf, otypes=[float])
    xs = np.unique(ecdf.values)
    fx = f(xs)
    d = max(np.abs(fx - ecdf(xs)).max(), np.abs(fx - ecdf.left(xs)).max())
    if grid > 0:
        lo, hi = domain if domain is not None else (xs[0], xs[-1])
        g = np.linspace(lo, hi, grid)
        d = max(d, np.abs(f(g) - ecdf(g)).max())
    return float(d)


# -- configuration and report ---------------------------------------------

@dataclass
class ExperimentConfig:
    experiment: str
    n: int
    trials: int
    master_seed: int = 0
    tolerance: float | None = None
    params: dict[str, float] = field(default_factory=dict)
    options: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.experiment not in EXPERIMENTS:
            raise ValueError(f"unknown experiment {self.experiment!r}; valid: {', '.join(EXPERIMENTS)}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if not 0 <= self.master_seed <= rng.MASK64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.tolerance is not None and not self.tolerance > 0:
            raise ValueError("tolerance must be > 0")


@dataclass
class ExperimentReport:
    config: ExperimentConfig
    model: str
    estimate: EstimateWithCI
    theory: float
    discrepancy: float
    tolerance: float
    passed: bool
    wall_time: float = 0.0
    extra: dict[str, Any] = field(default_factory=dict)
    samples: np.ndarray | None = field(default=None, repr=False)
    columns: tuple[str, ...] = ("value",)

    def to_dict(self) -> dict[str, Any]:
        return {
            "experiment": self.config.experiment,
            "model": self.model,
            "n": self.config.n,
            "trials": self.config.trials,
            "seed": self.config.master_seed,
            "params": dict(self.config.params),
            "estimate": self.estimate.to_dict(),
            "theory": self.theory,
            "discrepancy": self.discrepancy,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "extra": self.extra,
            "wall_time_s": self.wall_time,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def samples_csv(self) -> str:
        """Per-trial statistics as CSV (``trial`` plus one column per statistic)."""
        if self.samples is None:
            raise ValueError("no samples retained")
        s = self.samples.reshape(len(self.samples), -1)
        buf = io.StringIO()
        buf.write(",".join(("trial",) + self.columns) + "\n")
        for t, row in enumerate(s):
            buf.write(",".join([str(t)] + [f"{v:.17g}" for v in row]) + "\n")
        return buf.getvalue()

    def verdict(self) -> str:
        e = self.estimate
        return (
            f"{self.config.experiment}: estimate {e.point:.6g} "
            f"[{e.ci_low:.6g}, {e.ci_high:.6g}] theory {self.theory:.6g} "
            f"discrepancy {self.discrepancy:.4g} (tol {self.tolerance:.4g}) "
            f"{'PASS' if self.passed else 'FAIL'}"
        )


# -- per-trial samplers ----------------------------------------------------

def _interval_batch(model: str, n: int, streams: np.ndarray, params: dict, start: int):
    if model == "scheinerman":
        lo, hi = scheinerman_batch(n, streams)
    elif model == "matching":
        lo, hi = matching_batch(n, streams)
        return lo.astype(np.float64), hi.astype(np.float64)
    elif model == "prisner":
        lo, hi = prisner_batch(n, float(params.get("m", 1.0)), streams)
    else:
        raise ValueError(f"{model!r} is not an interval model")
    bad = first_tied_trial(lo, hi)
    if bad >= 0:
        raise TrialError("duplicate interval endpoints", start + bad, int(streams[bad]))
    return lo, hi


def _per_trial(fn):
    """Lift a ``(lo, hi) -> value`` function to a batch of trials."""
    def run(lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
        return np.array([fn(lo[t], hi[t]) for t in range(lo.shape[0])], dtype=np.float64)
    return run


def _edge_prob_trial(lo, hi):
    return (np.maximum(lo[:, 0], lo[:, 1]) <= np.minimum(hi[:, 0], hi[:, 1])).astype(np.float64)


def _degree_v1_trial(lo, hi):
    n = lo.shape[1]
    misses = (hi < lo[:, :1]) | (lo > hi[:, :1])
    return (n - 1 - misses.sum(axis=1)) / n


def _universal_trial(lo, hi):
    ok = (lo <= hi.min(axis=1, keepdims=True)) & (hi >= lo.max(axis=1, keepdims=True))
    return ok.any(axis=1).astype(np.float64)


def _family(lo, hi) -> IntervalFamily:
    return IntervalFamily(lo=lo, hi=hi, allow_ties=True)


def _clique_trial(lo, hi):
    n = lo.shape[1]
    out = np.empty((lo.shape[0], 2))
    for t in range(lo.shape[0]):
        fam = _family(lo[t], hi[t])
        omega = clique_number(fam)
        chi = int(greedy_coloring(fam).max()) + 1
        out[t] = (omega / n, float(chi == omega))
    return out


def _chi_omega_trial(lo, hi):
    out = np.empty(lo.shape[0])
    for t in range(lo.shape[0]):
        fam = _family(lo[t], hi[t])
        out[t] = float(int(greedy_coloring(fam).max()) + 1 != clique_number(fam))
    return out


def _independence(lo, hi):
    order = np.argsort(hi, kind="stable")
    last = -np.inf
    size = 0
    for a, b in zip(lo[order].tolist(), hi[order].tolist()):
        if a > last:
            size += 1
            last = b
    return size / math.sqrt(len(lo))


def _diameter_trial(lo, hi):
    out = np.empty((lo.shape[0], 2))
    out[:, 1] = _universal_trial(lo, hi)
    for t in range(lo.shape[0]):
        d = _interval_diameter(lo[t], hi[t])
        out[t, 0] = -1.0 if d is None else float(d)
    return out


def _graph_trials(kind: str):
    def run(n: int, streams: np.ndarray, params: dict, start: int) -> np.ndarray:
        rows = []
        for s in streams.tolist():
            if kind == "gnp":
                a = gnp_adjacency(n, float(params.get("p", 2.0 / 3.0)), s)
                d = a.sum(axis=1)
                eps = float(params.get("eps", 0.1))
                p = float(params.get("p", 2.0 / 3.0))
                inside = bool(((d >= (p - eps) * n) & (d <= (p + eps) * n)).all())
                rows.append((float(inside), d.min() / n, d.max() / n))
            elif kind == "dot-edges":
                a, _ = dot_product_adjacency(n, float(params.get("r", 1.0)), s)
                rows.append((float(a.sum() // 2),))
            elif kind == "dot-cluster":
                rows.append(_cluster_counts(n, float(params.get("r", 1.0)), s, int(params["_per_trial_triples"])))
            elif kind == "dot-structure":
                a, _ = dot_product_adjacency(n, float(params.get("r", 1.0)), s)
                g = Graph.from_adjacency(a)
                comps = connected_components(g)
                giant = max(comps, key=len)
                isolated = sum(1 for c in comps if len(c) == 1)
                rows.append((float(isolated), float(len(giant)), float(component_diameter(g, giant))))
            else:  # pragma: no cover
                raise ValueError(kind)
        return np.array(rows, dtype=np.float64)
    return run


def _cluster_counts(n: int, r: float, stream: int, k: int) -> tuple[float, float, float, float]:
    """Sample ``k`` ordered triples of distinct vertices from one graph and count
    (triples, a~c, a~b & b~c, all three edges)."""
    if n < 3:
        raise ValueError("clustering needs n >= 3")
    a, _ = dot_product_adjacency(n, r, stream)
    u = rng.uniforms(np.array([stream], dtype=np.uint64), 3 * k, offset=n + n * (n - 1) // 2)[0]
    i = np.floor(u[0::3] * n).astype(np.int64)
    j = np.floor(u[1::3] * (n - 1)).astype(np.int64)
    j += j >= i
    lo, hi = np.minimum(i, j), np.maximum(i, j)
    c = np.floor(u[2::3] * (n - 2)).astype(np.int64)
    c += c >= lo
    c += c >= hi
    ab, bc, ac = a[i, j], a[j, c], a[i, c]
    path = ab & bc
    return float(k), float(ac.sum()), float(path.sum()), float((path & ac).sum())


# -- summaries ---------------------------------------------------------------

def _proportion_summary(target: float):
    def summarize(s: np.ndarray, cfg: ExperimentConfig, level: float):
        est = estimate_proportion(int(s.sum()), len(s), level)
        var = float(s.var(ddof=1)) if len(s) > 1 else 0.0
        extra = {"sample_variance": var, "bernoulli_variance": est.point * (1 - est.point)}
        return est, target, abs(est.point - target), extra
    return summarize


def _mean_z_summary(expected: Callable[[ExperimentConfig], float]):
    def summarize(s: np.ndarray, cfg: ExperimentConfig, level: float):
        est = estimate_mean(s, level)
        mu = expected(cfg)
        sd = float(s.std(ddof=1)) if len(s) > 1 else 0.0
        se = sd / math.sqrt(len(s))
        z = abs(est.point - mu) / se if se > 0 else (0.0 if est.point == mu else math.inf)
        extra = {"standard_error": se, "sample_variance": sd * sd}
        return est, mu, z, extra
    return summarize


def _edge_count_summary(s, cfg, level):
    est, mu, z, extra = _mean_z_summary(lambda c: theory.expected_edges(c.n))(s, cfg, level)
    n = cfg.n
    extra["variance_over_n3"] = extra["sample_variance"] / n ** 3
    extra["exact_variance"] = theory.edge_count_variance(n)
    extra["limit_variance_over_n3"] = 2.0 / 45.0
    return est, mu, z, extra


def _ks_summary(cdf: Callable[[float], float], scale: str):
    def summarize(s: np.ndarray, cfg: ExperimentConfig, level: float):
        e = EmpiricalCDF(s)
        d = ks_distance(e, cdf, grid=int(cfg.options.get("grid", 1001)))
        half = KS_95 / math.sqrt(len(s))
        est = EstimateWithCI(d, max(0.0, d - half), d + half, level, len(s))
        q = np.quantile(s, [0.1, 0.25, 0.5, 0.75, 0.9]).tolist()
        return est, 0.0, d, {"statistic": scale, "quantiles_10_25_50_75_90": q, "sample_mean": float(s.mean())}
    return summarize


def _clique_summary(s, cfg, level):
    lo, hi = cfg.options.get("bracket", (0.49, 0.54))
    ratio = s[:, 0]
    inside = int(((ratio >= lo) & (ratio <= hi)).sum())
    est = estimate_proportion(inside, len(ratio), level)
    extra = {
        "bracket": [lo, hi],
        "mean_omega_over_n": float(ratio.mean()),
        "chi_equals_omega_trials": int(s[:, 1].sum()),
    }
    return est, 0.5, 1.0 - est.point, extra


def _count_failures_summary(target: float):
    """Gate on the number of failed trials; column 0 is 1 on success when
    ``target`` is 1 and 1 on failure when ``target`` is 0."""
    def summarize(s: np.ndarray, cfg: ExperimentConfig, level: float):
        s2 = s.reshape(len(s), -1)
        hits = int(s2[:, 0].sum())
        failures = hits if target == 0.0 else len(s2) - hits
        est = estimate_proportion(hits, len(s2), level)
        extra: dict[str, Any] = {"failed_trials": failures}
        if s2.shape[1] == 3:
            extra["min_degree_over_n"] = float(s2[:, 1].min())
            extra["max_degree_over_n"] = float(s2[:, 2].max())
        return est, target, float(failures), extra
    return summarize


def _tail_summary(s, cfg, level):
    est = estimate_proportion(int(s.sum()), len(s), level)
    return est, 1.0, 1.0 - est.point, {"omega_n": "n**0.6", "threshold": cfg.n - cfg.n ** 0.6}


def _model_equivalence_summary(s, cfg, level):
    exact = exact_edge_count_distribution(cfg.n)
    counts = np.bincount(s.astype(np.int64), minlength=cfg.n * (cfg.n - 1) // 2 + 1)
    emp = counts / len(s)
    diffs = {k: float(emp[k] - float(p)) for k, p in exact.outcomes.items()}
    outside = float(sum(emp[k] for k in range(len(emp)) if k not in exact.outcomes))
    worst = max(max(abs(v) for v in diffs.values()), outside)
    est = EstimateWithCI(worst, worst, worst, level, len(s))
    extra = {
        "empirical": {str(k): float(v) for k, v in enumerate(emp)},
        "exact": {str(k): f"{p.numerator}/{p.denominator}" for k, p in exact.outcomes.items()},
    }
    return est, 0.0, worst, extra


def _independence_summary(s, cfg, level):
    est = estimate_mean(s, level)
    c = theory.independence_constant()
    return est, c, abs(est.point - c), {"standard_error": (est.ci_high - est.point) / _z(level)}


def _cluster_theory(r: float) -> float:
    tri = (1.0 / (2 * r + 1)) ** 3
    path = (1.0 / (r + 1)) ** 2 / (2 * r + 1)
    return tri / path - theory.dot_edge_probability(r)


def _cluster_summary(s, cfg, level):
    tot = s.sum(axis=0)
    n_tri, ac, path, tri = (int(v) for v in tot)
    cond = estimate_proportion(tri, path, level)
    base = estimate_proportion(ac, n_tri, level)
    d, low, high = _newcombe(cond, base)
    est = EstimateWithCI(d, low, high, level, len(s))
    r = float(cfg.params.get("r", 1.0))
    extra = {
        "sampled_triples": n_tri,
        "p_ac_given_path": cond.point,
        "p_ac": base.point,
        "ci_excludes_zero": low > 0,
    }
    return est, _cluster_theory(r), 0.0 if low > 0 else 1.0, extra


def _expected_isolated(n: int, r: float) -> float:
    # n * E[(1 - x^r / (1 + r))^(n-1)], x ~ U[0, 1]
    x = np.concatenate([[0.0], np.logspace(-14, 0, 200001)])
    y = (1.0 - x ** r / (1.0 + r)) ** (n - 1)
    return float(n * np.sum((y[1:] + y[:-1]) * np.diff(x)) / 2.0)


def _structure_summary(s, cfg, level):
    r = float(cfg.params.get("r", 1.0))
    est = estimate_mean(s[:, 0], level)
    diam = s[:, 2]
    extra = {
        "expected_isolated": _expected_isolated(cfg.n, r),
        "mean_giant_size": float(s[:, 1].mean()),
        "giant_diameter_max": int(diam.max()),
        "giant_diameter_counts": {str(int(k)): int(v) for k, v in zip(*np.unique(diam, return_counts=True))},
        "gated": False,
    }
    return est, extra["expected_isolated"], 0.0, extra


def _diameter_summary(s, cfg, level):
    diam, universal = s[:, 0], s[:, 1] > 0
    two = int((diam == 2).sum())
    est = estimate_proportion(two, len(diam), level)
    vals, counts = np.unique(diam, return_counts=True)
    at_most_2 = (diam >= 0) & (diam <= 2)
    extra = {
        "diameter_counts": {("disconnected" if v < 0 else str(int(v))): int(c) for v, c in zip(vals, counts)},
        "p_diameter_at_most_2": float(at_most_2.sum() / len(diam)),
        "p_universal_vertex": float(universal.mean()),
        # diameter <= 2 and a universal vertex are the same event for interval graphs
        "diam_le_2_iff_universal_trials": int((at_most_2 == universal).sum()),
        "lower_bound_only": True,
    }
    return est, 2.0 / 3.0, max(0.0, 2.0 / 3.0 - est.point), extra


# -- registry ----------------------------------------------------------------

@dataclass(frozen=True)
class Experiment:
    model: str
    tolerance: float
    summarize: Callable
    interval_stat: Callable | None = None
    graph_trial: Callable | None = None
    columns: tuple[str, ...] = ("value",)
    description: str = ""


EXPERIMENTS: dict[str, Experiment] = {
    "edge-prob": Experiment(
        "scheinerman", 0.002, _proportion_summary(2.0 / 3.0), _edge_prob_trial,
        columns=("edge_01",), description="P(vertices 0 and 1 adjacent) vs 2/3"),
    "edge-count": Experiment(
        "scheinerman", 3.0, _edge_count_summary, _per_trial(_edge_count),
        columns=("edges",), description="mean edge count vs n(n-1)/3, in standard errors"),
    "degree-cdf": Experiment(
        "scheinerman", 0.02, _ks_summary(theory.degree_cdf_limit, "d(v1)/n"), _degree_v1_trial,
        columns=("degree_over_n",), description="KS distance of d(v1)/n to the limit CDF"),
    "max-degree-exact": Experiment(
        "scheinerman", 0.005, _proportion_summary(2.0 / 3.0), _universal_trial,
        columns=("has_universal",), description="P(max degree = n-1) vs 2/3"),
    "max-degree-tail": Experiment(
        "scheinerman", 0.05, _tail_summary,
        _per_trial(lambda lo, hi: float(_degrees(lo, hi).max() >= len(lo) - len(lo) ** 0.6)),
        columns=("max_degree_ok",), description="P(max degree >= n - n^0.6) vs 1"),
    "min-degree": Experiment(
        "scheinerman", 0.05, _ks_summary(theory.min_degree_cdf_limit, "delta/sqrt(n)"),
        _per_trial(lambda lo, hi: _degrees(lo, hi).min() / math.sqrt(len(lo))),
        columns=("min_degree_over_sqrt_n",), description="KS distance of delta/sqrt(n) to 1-exp(-k^2/2)"),
    "clique": Experiment(
        "scheinerman", 0.05, _clique_summary, _clique_trial,
        columns=("omega_over_n", "chi_equals_omega"), description="fraction of trials with omega/n in bracket"),
    "chi-equals-omega": Experiment(
        "scheinerman", 0.5, _count_failures_summary(0.0), _chi_omega_trial,
        columns=("mismatch",), description="trials where greedy colouring count differs from omega"),
    "independence": Experiment(
        "scheinerman", 0.04,
        _independence_summary, _per_trial(_independence),
        columns=("alpha_over_sqrt_n",), description="mean alpha/sqrt(n) vs 2/sqrt(pi)"),
    "gnp-degrees": Experiment(
        "gnp", 0.5, _count_failures_summary(1.0), graph_trial=_graph_trials("gnp"),
        columns=("all_inside", "min_degree_over_n", "max_degree_over_n"),
        description="trials where some G(n,p) degree leaves (p +- eps) n"),
    "model-equivalence": Experiment(
        "scheinerman", 0.005, _model_equivalence_summary, _per_trial(_edge_count),
        columns=("edges",), description="max deviation from the exact matching-model edge-count law"),
    "dotprod-edges": Experiment(
        "dotprod", 3.0,
        _mean_z_summary(lambda c: c.n * (c.n - 1) / 2 * theory.dot_edge_probability(float(c.params.get("r", 1.0)))),
        graph_trial=_graph_trials("dot-edges"),
        columns=("edges",), description="mean edges vs C(n,2)/(1+r)^2, in standard errors"),
    "dotprod-clustering": Experiment(
        "dotprod", 0.5, _cluster_summary, graph_trial=_graph_trials("dot-cluster"),
        columns=("triples", "ac", "ab_bc", "ab_bc_ac"),
        description="P(a~c | a~b, b~c) - P(a~c), CI must exclude 0"),
    "dotprod-structure": Experiment(
        "dotprod", 1.0, _structure_summary, graph_trial=_graph_trials("dot-structure"),
        columns=("isolated", "giant_size", "giant_diameter"),
        description="isolated vertices and giant-component diameter (report only)"),
    "rig-diameter": Experiment(
        "scheinerman", 0.01, _diameter_summary, _diameter_trial,
        columns=("diameter", "has_universal"), description="P(diameter = 2), gated by the 2/3 lower bound"),
}


def _chunk_size(exp: Experiment, n: int) -> int:
    if exp.graph_trial is not None:
        return 1
    return max(1, 2_000_000 // (2 * n))


def run_experiment(cfg: ExperimentConfig) -> ExperimentReport:
    """Run ``cfg.trials`` seeded trials and compare against theory.

    Options: ``workers`` (threads, default 1), ``level`` (CI level, 0.95),
    ``sample_cap`` (per-trial values kept on the report), ``chunk``,
    ``grid`` (KS grid), ``bracket`` (clique), ``triples`` (clustering total),
    ``model`` (interval model override, e.g. ``matching``).
    """
    exp = EXPERIMENTS[cfg.experiment]
    model = cfg.options.get("model", exp.model)
    level = float(cfg.options.get("level", 0.95))
    workers = int(cfg.options.get("workers", 1))
    chunk = int(cfg.options.get("chunk", _chunk_size(exp, cfg.n)))
    params = dict(cfg.params)
    if cfg.experiment == "edge-prob" and cfg.n < 2:
        raise ValueError("edge-prob needs n >= 2")
    if cfg.experiment == "model-equivalence" and cfg.n > 7:
        raise ValueError("model-equivalence compares against exact enumeration, n <= 7")
    if cfg.experiment == "dotprod-clustering":
        total = int(cfg.options.get("triples", 1_000_000))
        params["_per_trial_triples"] = -(-total // cfg.trials)

    t0 = time.perf_counter()
    streams = rng.derive_streams(cfg.master_seed, cfg.trials)
    starts = list(range(0, cfg.trials, chunk))

    def work(start: int) -> np.ndarray:
        s = streams[start:start + chunk]
        if exp.graph_trial is not None:
            return exp.graph_trial(cfg.n, s, params, start)
        lo, hi = _interval_batch(model, cfg.n, s, params, start)
        return exp.interval_stat(lo, hi)

    if workers > 1 and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(work, starts))
    else:
        parts = [work(s) for s in starts]
    samples = np.concatenate(parts, axis=0)

    est, target, disc, extra = exp.summarize(samples, cfg, level)
    tol = float(cfg.tolerance if cfg.tolerance is not None else exp.tolerance)
    cap = int(cfg.options.get("sample_cap", DEFAULT_SAMPLE_CAP))
    return ExperimentReport(
        config=cfg,
        model=model,
        estimate=est,
        theory=float(target),
        discrepancy=float(disc),
        tolerance=tol,
        passed=bool(disc <= tol),
        wall_time=time.perf_counter() - t0,
        extra=extra,
        samples=samples[:cap],
        columns=exp.columns,
    )
