"""Misordering detectors and per-entity misordered rates."""

from .exceptions import AnalysisError, EmptyTraceError, IncompleteMessageError, UndefinedRateError
from .models import (
    ENTITY_CLASSES,
    Carrier,
    EntityClass,
    EntityRate,
    MisorderReport,
    RateMode,
    Violation,
    ViolationKind,
)
from .predicates import brute_force, detect, detect_p1, detect_p2, detect_p3
from .rates import (
    arrival_streams,
    classify,
    count_misordered,
    count_state_mismatches,
    entity_rates,
    misordered_rate,
    relation_entities,
)
from .report import ALL_DETECTORS, alternate_mode, analyze

__all__ = [
    "ALL_DETECTORS",
    "ENTITY_CLASSES",
    "AnalysisError",
    "Carrier",
    "EmptyTraceError",
    "EntityClass",
    "EntityRate",
    "IncompleteMessageError",
    "MisorderReport",
    "RateMode",
    "UndefinedRateError",
    "Violation",
    "ViolationKind",
    "alternate_mode",
    "analyze",
    "arrival_streams",
    "brute_force",
    "classify",
    "count_misordered",
    "count_state_mismatches",
    "detect",
    "detect_p1",
    "detect_p2",
    "detect_p3",
    "entity_rates",
    "misordered_rate",
    "relation_entities",
]
