"""Tests for Gaussian hop delay sampling."""

import numpy as np

from python.domain.home.models import LinkDelayModel

from ..delays import MIN_DELAY, group_generators, sample_hop_delay


def _link(mean: float, std: float) -> LinkDelayModel:
    return LinkDelayModel(endpoint_kinds=("iot-device", "edge"), mean=mean, std=std)


def test_zero_std_returns_mean_exactly() -> None:
    """Test a deterministic link returns its mean without consuming randomness."""
    rng = np.random.default_rng(1)
    assert sample_hop_delay(_link(1.5, 0.0), rng) == 1.5
    assert rng.normal() == np.random.default_rng(1).normal()


def test_sample_mean_converges() -> None:
    """Test 10^5 draws of the device-to-edge row average to its mean."""
    rng = np.random.default_rng(7)
    link = _link(0.056, 0.007)
    draws = np.array([sample_hop_delay(link, rng) for _ in range(100_000)])
    assert abs(draws.mean() - 0.056) < 0.001
    assert (draws > 0).all()


def test_wide_distribution_stays_positive() -> None:
    """Test truncation keeps every delay strictly positive."""
    rng = np.random.default_rng(3)
    link = _link(0.001, 10.0)
    draws = [sample_hop_delay(link, rng) for _ in range(2000)]
    assert min(draws) > 0
    assert MIN_DELAY > 0


def test_group_generators_are_reproducible_and_independent() -> None:
    """Test spawned generators depend only on the seed and differ per group."""
    first = [rng.normal() for rng in group_generators(42, 3)]
    second = [rng.normal() for rng in group_generators(42, 3)]
    assert first == second
    assert len(set(first)) == 3
    assert [rng.normal() for rng in group_generators(43, 3)] != first
