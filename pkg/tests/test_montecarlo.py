import json
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import stats

from riglab.generators import RngSeed
from riglab.montecarlo import (
    EXPERIMENTS,
    ExperimentConfig,
    TrialError,
    derive_trial_seed,
    empirical_cdf,
    estimate_mean,
    estimate_proportion,
    ks_distance,
    run_experiment,
)

REPORT_KEYS = {"experiment", "model", "n", "trials", "seed", "estimate", "theory",
               "discrepancy", "tolerance", "pass", "wall_time_s"}


def test_derive_trial_seed():
    assert derive_trial_seed(5, 3) == derive_trial_seed(5, 3) == RngSeed.from_master(5, 3)
    assert derive_trial_seed(5, 3) != derive_trial_seed(5, 4)


def test_estimate_proportion_edges():
    e = estimate_proportion(0, 50)
    assert (e.point, e.ci_low) == (0.0, 0.0)
    e = estimate_proportion(50, 50)
    assert (e.point, e.ci_high) == (1.0, 1.0)
    e = estimate_proportion(666_667, 1_000_000)
    assert e.ci_low < 2 / 3 < e.ci_high
    assert (e.ci_high - e.ci_low) / 2 == pytest.approx(0.00092, abs=1e-5)
    with pytest.raises(ValueError):
        estimate_proportion(3, 2)


@given(st.integers(1, 5000), st.data())
def test_wilson_contains_point(trials, data):
    k = data.draw(st.integers(0, trials))
    e = estimate_proportion(k, trials)
    assert 0.0 <= e.ci_low <= e.point <= e.ci_high <= 1.0


def test_wilson_closed_form():
    # closed form of the Wilson score interval at z = 1.959964
    k, t, z = 30, 100, stats.norm.ppf(0.975)
    p = k / t
    c = (p + z * z / (2 * t)) / (1 + z * z / t)
    h = z / (1 + z * z / t) * math.sqrt(p * (1 - p) / t + z * z / (4 * t * t))
    e = estimate_proportion(k, t)
    assert (e.ci_low, e.ci_high) == pytest.approx((c - h, c + h))


def test_estimate_mean():
    e = estimate_mean(np.arange(10.0))
    assert e.point == 4.5
    assert e.ci_high - e.point == pytest.approx(1.959964 * np.arange(10.0).std(ddof=1) / math.sqrt(10), rel=1e-6)


def test_empirical_cdf_examples():
    F = empirical_cdf([5])
    assert F(4.999) == 0 and F(5) == 1 and F(7) == 1
    assert empirical_cdf([1, 2, 3])(2) == pytest.approx(2 / 3)
    assert empirical_cdf([3, 1, 2]) == empirical_cdf([1, 2, 3])
    with pytest.raises(ValueError):
        empirical_cdf([])


def test_ks_examples():
    xs = np.linspace(0, 1, 1000, endpoint=False) + 0.0005
    assert ks_distance(empirical_cdf(xs), lambda x: x) <= 1 / 1000
    assert ks_distance(empirical_cdf([0.5]), lambda x: x) == pytest.approx(0.5)


@given(st.lists(st.floats(-3, 3), min_size=1, max_size=200))
def test_ks_matches_scipy(values):
    d = ks_distance(empirical_cdf(values), stats.norm.cdf)
    assert d == pytest.approx(stats.kstest(values, "norm").statistic, abs=1e-12)


def test_ks_uniform_sample():
    u = np.random.default_rng(8).random(10_000)
    assert ks_distance(empirical_cdf(u), lambda x: x, grid=1001, domain=(0, 1)) < 0.02


def test_config_validation():
    with pytest.raises(ValueError, match="valid"):
        ExperimentConfig("nope", 10, 10)
    with pytest.raises(ValueError):
        ExperimentConfig("edge-prob", 10, 0)
    with pytest.raises(ValueError):
        ExperimentConfig("edge-prob", 10, 10, master_seed=-1)
    with pytest.raises(ValueError):
        run_experiment(ExperimentConfig("model-equivalence", 8, 10))


def test_report_schema_and_reproducibility():
    cfg = ExperimentConfig("edge-prob", 5, 2000, master_seed=4)
    a, b = run_experiment(cfg), run_experiment(cfg)
    d = json.loads(a.to_json())
    assert REPORT_KEYS <= set(d)
    assert set(d["estimate"]) == {"point", "ci_low", "ci_high", "level"}
    da, db = a.to_dict(), b.to_dict()
    da.pop("wall_time_s"), db.pop("wall_time_s")
    assert da == db
    assert a.samples_csv().splitlines()[0] == "trial,edge_01"
    assert "PASS" in a.verdict() or "FAIL" in a.verdict()


@pytest.mark.parametrize("name,n,trials", [
    ("edge-count", 50, 300),
    ("clique", 300, 40),
    ("gnp-degrees", 60, 20),
    ("dotprod-clustering", 100, 10),
    ("rig-diameter", 100, 300),
])
def test_threads_do_not_change_results(name, n, trials):
    opts = {"chunk": 7} if EXPERIMENTS[name].graph_trial is None else {}
    serial = run_experiment(ExperimentConfig(name, n, trials, 3, options=dict(opts, workers=1)))
    threaded = run_experiment(ExperimentConfig(name, n, trials, 3, options=dict(opts, workers=4)))
    assert np.array_equal(serial.samples, threaded.samples)
    assert serial.estimate == threaded.estimate


def test_chunking_does_not_change_results():
    a = run_experiment(ExperimentConfig("degree-cdf", 200, 500, 2, options={"chunk": 3}))
    b = run_experiment(ExperimentConfig("degree-cdf", 200, 500, 2))
    assert np.array_equal(a.samples, b.samples)


def test_trial_matches_single_generator():
    from riglab.algorithms import interval_degrees
    from riglab.generators import gen_scheinerman
    r = run_experiment(ExperimentConfig("degree-cdf", 50, 20, master_seed=6))
    for t in (0, 7, 19):
        f = gen_scheinerman(50, derive_trial_seed(6, t))
        assert r.samples[t] == interval_degrees(f)[0] / 50


def test_max_degree_exact_example():
    r = run_experiment(ExperimentConfig("max-degree-exact", 100, 100_000, master_seed=1))
    assert abs(r.estimate.point - 2 / 3) < 0.005 and r.passed


def test_chi_equals_omega_example():
    r = run_experiment(ExperimentConfig("chi-equals-omega", 1000, 100))
    assert r.passed and r.discrepancy == 0


def test_edge_count_example():
    r = run_experiment(ExperimentConfig("edge-count", 1000, 1000, master_seed=5))
    se = r.samples.std(ddof=1) / math.sqrt(1000)
    assert abs(r.estimate.point - 333_000) < 3 * se and r.passed


def test_matching_model_option():
    r = run_experiment(ExperimentConfig("model-equivalence", 3, 20_000, options={"model": "matching"}))
    assert r.model == "matching" and r.passed


def test_ties_raise_trial_error():
    with pytest.raises(TrialError) as err:
        run_experiment(ExperimentConfig("edge-prob", 3, 5, params={"m": 1.0}, options={"model": "prisner"}))
    assert err.value.trial == 0


def test_every_experiment_runs_small():
    sizes = {"model-equivalence": 3, "edge-prob": 4}
    for name in EXPERIMENTS:
        r = run_experiment(ExperimentConfig(name, sizes.get(name, 60), 12, 1))
        assert REPORT_KEYS <= set(r.to_dict())
        assert math.isfinite(r.discrepancy)
