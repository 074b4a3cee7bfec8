"""Random interval graphs: generators, exact invariants, limit laws and
seeded Monte Carlo checks."""
from .algorithms import (
    ChainResult,
    chromatic_number,
    clique_number,
    connected_components,
    count_containing,
    diameter,
    graph_stats,
    independence_number,
    interval_degrees,
    interval_diameter,
)
from .core import (
    DegreeSummary,
    Graph,
    Interval,
    IntervalFamily,
    degree_summary,
    graph_from_intervals,
    has_universal_vertex,
    interval_precedes,
    intervals_intersect,
    make_interval,
    radius,
)
from .generators import (
    RngSeed,
    gen_dot_product,
    gen_gnp,
    gen_matching,
    gen_prisner,
    gen_scheinerman,
    gen_threshold,
    generate,
)
from .montecarlo import ExperimentConfig, ExperimentReport, derive_trial_seed, run_experiment

__version__ = "0.1.0"
