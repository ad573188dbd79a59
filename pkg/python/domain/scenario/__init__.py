"""Scenario configuration, trace model and scenario resolution."""

from .models import (
    DEFAULT_ACTION_STAGGER,
    DEFAULT_N_EVENTS,
    ScenarioConfig,
    ScenarioGroup,
    StimulusTemplate,
    Trace,
)
from .resolve import group_rules, resolve_rules, resolve_topology

__all__ = [
    "DEFAULT_ACTION_STAGGER",
    "DEFAULT_N_EVENTS",
    "ScenarioConfig",
    "ScenarioGroup",
    "StimulusTemplate",
    "Trace",
    "group_rules",
    "resolve_rules",
    "resolve_topology",
]
