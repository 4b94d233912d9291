"""Small utilities shared by several test modules."""

import numpy as np

from qshape.distributions import open_uniform
from qshape.simulation import replicate_stream


def draw_sorted(model, master_seed, key, n):
    """Deterministic sorted sample via the package's own stream layout."""
    rng = replicate_stream(master_seed, key)
    return np.sort(np.asarray(model.quantile(open_uniform(rng, n)), dtype=float))


def ks_statistic(sorted_sample, cdf):
    """Two-sided Kolmogorov-Smirnov distance of a sorted sample from cdf."""
    n = sorted_sample.size
    f = np.asarray(cdf(sorted_sample), dtype=float)
    i = np.arange(1, n + 1)
    return float(max(np.max(i / n - f), np.max(f - (i - 1) / n)))
