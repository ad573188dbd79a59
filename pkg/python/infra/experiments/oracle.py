"""Closed-form swap probability for two messages racing over Gaussian paths."""

import math
from collections.abc import Sequence

from scipy import stats

from python.domain.home.topology import Topology


def path_delay_variance(topology: Topology, source: str, path: Sequence[str]) -> float:
    """Total delay variance (s²) of a path: the sum of its per-hop variances."""
    return topology.path_variance(source, path)


def pair_swap_probability(variance_i: float, variance_j: float, gap: float) -> float:
    """Probability that a message sent ``gap`` seconds later arrives first.

    The arrival difference is Normal(gap, variance_i + variance_j), so the swap
    probability is Phi(-gap / sqrt(variance_i + variance_j)).
    """
    if variance_i < 0 or variance_j < 0:
        raise ValueError("variances must be non-negative")
    total = variance_i + variance_j
    if total == 0:
        # Deterministic delays: ties count as ordered.
        return 0.0 if gap >= 0 else 1.0
    return float(stats.norm.cdf(-gap / math.sqrt(total)))
