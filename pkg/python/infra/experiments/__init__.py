"""Experiment harness: scenario generators, concurrent runs and statistics."""

from .dependencies import clear_overrides, get_scheduler, inject_deps, override_dependency
from .exceptions import ExperimentError
from .models import POOLED, CellResult, ExperimentCell, ExperimentStats, RawRate, StatRow
from .oracle import pair_swap_probability, path_delay_variance
from .runner import run_cell, run_experiment
from .scenarios import (
    DEFAULT_PERIODS,
    EXPERIMENT_CLASSES,
    MULTI_SOURCE_GROUPS,
    SINGLE_SOURCE_STIMULI,
    TEMPORAL_GROUPS,
    generate_scenario,
)
from .stats import aggregate, pooled_mean, raw_rates

__all__ = [
    "DEFAULT_PERIODS",
    "EXPERIMENT_CLASSES",
    "MULTI_SOURCE_GROUPS",
    "POOLED",
    "SINGLE_SOURCE_STIMULI",
    "TEMPORAL_GROUPS",
    "CellResult",
    "ExperimentCell",
    "ExperimentError",
    "ExperimentStats",
    "RawRate",
    "StatRow",
    "aggregate",
    "clear_overrides",
    "generate_scenario",
    "get_scheduler",
    "inject_deps",
    "override_dependency",
    "pair_swap_probability",
    "path_delay_variance",
    "pooled_mean",
    "raw_rates",
    "run_cell",
    "run_experiment",
]
