"""Combined analysis of a trace: entity rates under both counting modes plus violations."""

import logging
from collections.abc import Sequence

from python.domain.home.models import TemporalRelation
from python.domain.scenario.models import Trace

from .exceptions import EmptyTraceError
from .models import MisorderReport, RateMode, Violation, ViolationKind
from .predicates import detect
from .rates import entity_rates

logger = logging.getLogger(__name__)

ALL_DETECTORS: tuple[ViolationKind, ...] = ("P1", "P2", "P3")


def alternate_mode(mode: RateMode) -> RateMode:
    """Mode the sensitivity rates are counted in; label-based counting falls back to adjacent."""
    return "any" if mode == "adjacent" else "adjacent"


def analyze(
    trace: Trace,
    detectors: Sequence[ViolationKind] = ALL_DETECTORS,
    relations: Sequence[TemporalRelation] | None = None,
    mode: RateMode = "adjacent",
) -> MisorderReport:
    """Raises EmptyTraceError, IncompleteMessageError, ConfigurationError."""
    if trace.is_empty:
        raise EmptyTraceError("Trace has no messages", context={"scenario": trace.scenario.name})
    violations: dict[ViolationKind, list[Violation]] = {}
    for kind in detectors:
        violations[kind] = detect(trace, kind, relations)
        logger.info(f"{kind}: {len(violations[kind])} violations in {trace.scenario.name}")
    return MisorderReport(
        mode=mode,
        rates=entity_rates(trace, mode),
        sensitivity=entity_rates(trace, alternate_mode(mode)),
        violations=violations,
    )
