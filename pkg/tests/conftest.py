import numpy as np
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from riglab.core import IntervalFamily

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def families(draw, min_n=1, max_n=12, grid=None):
    """Interval families; with ``grid`` the endpoints are small integers so
    ties and touching endpoints are common."""
    n = draw(st.integers(min_n, max_n))
    if grid:
        pt = st.integers(0, grid)
    else:
        pt = st.floats(0.0, 1.0, allow_nan=False, allow_infinity=False)
    pairs = draw(st.lists(st.tuples(pt, pt), min_size=n, max_size=n))
    return IntervalFamily([(float(a), float(b)) for a, b in pairs], allow_ties=True)


def disjoint(n):
    return IntervalFamily([(2 * i + 1, 2 * i + 2) for i in range(n)])


def nested(n):
    return IntervalFamily([(i + 1, 2 * n - i) for i in range(n)])


STAR = [(1, 6), (2, 3), (4, 5)]


def random_small_families(count, max_n, seed=12345):
    """Deterministic batch of Scheinerman families with 1 <= n <= max_n."""
    from riglab.generators import gen_scheinerman, RngSeed
    rs = np.random.default_rng(seed)
    return [gen_scheinerman(int(rs.integers(1, max_n + 1)), RngSeed.from_master(seed, t))
            for t in range(count)]
