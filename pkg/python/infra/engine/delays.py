"""Gaussian hop delays drawn from seeded numpy generators."""

import numpy as np

from python.domain.home.models import LinkDelayModel

MAX_REDRAWS = 8
MIN_DELAY = 0.001  # seconds; used once every redraw came out non-positive


def group_generators(seed: int, n_groups: int) -> list[np.random.Generator]:
    """One independent generator per scenario group, all derived from one seed."""
    children = np.random.SeedSequence(seed).spawn(n_groups)
    return [np.random.default_rng(child) for child in children]


def sample_hop_delay(link: LinkDelayModel, rng: np.random.Generator) -> float:
    """Draw a strictly positive delay from Normal(mean, std²).

    A non-positive draw is redrawn up to MAX_REDRAWS times before falling back
    to MIN_DELAY. A zero std returns the mean without consuming randomness.
    """
    if link.std == 0:
        return link.mean
    for _ in range(1 + MAX_REDRAWS):
        draw = float(rng.normal(link.mean, link.std))
        if draw > 0:
            return draw
    return MIN_DELAY
