"""Misordering detectors over complete traces.

For a pair (i, j) of messages in the same scenario group, with i created
strictly after j (ts_i > ts_j) but received strictly before it (ta_i < ta_j):

* P1: same source, same actuator, different commands.
* P2: different sources, same actuator, different commands.
* P3: different actuators whose (actuator, command) pairs both belong to one
  declared temporal relation.

Each violating pair is reported once, as (i, j).
"""

import logging
from collections import defaultdict
from collections.abc import Iterable, Iterator, Sequence

import numpy as np

from python.domain.home.models import MessageRecord, TemporalRelation
from python.domain.scenario.models import Trace

from .exceptions import EmptyTraceError, IncompleteMessageError
from .models import Violation, ViolationKind

logger = logging.getLogger(__name__)

# Rows of the pairwise comparison evaluated at once.
BLOCK_SIZE = 1024


def _require_complete(messages: Iterable[MessageRecord]) -> None:
    for message in messages:
        if message.ta is None:
            raise IncompleteMessageError(message.msg_id)


def _partition(
    messages: Iterable[MessageRecord], key: str
) -> Iterator[list[MessageRecord]]:
    buckets: dict[tuple[str, ...], list[MessageRecord]] = defaultdict(list)
    for message in messages:
        if key == "actuator":
            buckets[(message.group, message.actuator)].append(message)
        else:
            buckets[(message.group,)].append(message)
    for bucket_key in sorted(buckets):
        yield buckets[bucket_key]


def _codes(labels: Sequence[str]) -> np.ndarray:
    _, codes = np.unique(np.asarray(labels, dtype=object), return_inverse=True)
    return codes


def _inverted_pairs(
    messages: list[MessageRecord], *, same_source: bool | None, same_actuator: bool
) -> list[tuple[int, int]]:
    """Index pairs (i, j) with ts_i > ts_j, ta_i < ta_j and the requested equalities."""
    n = len(messages)
    if n < 2:
        return []
    ts = np.array([m.ts for m in messages], dtype=np.float64)
    ta = np.array([m.ta for m in messages], dtype=np.float64)
    sources = _codes([m.source for m in messages])
    actuators = _codes([m.actuator for m in messages])
    commands = _codes([m.command for m in messages])

    pairs: list[tuple[int, int]] = []
    for start in range(0, n, BLOCK_SIZE):
        rows = slice(start, min(start + BLOCK_SIZE, n))
        mask = (ts[rows, None] > ts[None, :]) & (ta[rows, None] < ta[None, :])
        if same_actuator:
            mask &= actuators[rows, None] == actuators[None, :]
            mask &= commands[rows, None] != commands[None, :]
        else:
            mask &= actuators[rows, None] != actuators[None, :]
        if same_source is True:
            mask &= sources[rows, None] == sources[None, :]
        elif same_source is False:
            mask &= sources[rows, None] != sources[None, :]
        for i, j in zip(*np.nonzero(mask), strict=True):
            pairs.append((start + int(i), int(j)))
    return pairs


def _violations(
    kind: ViolationKind, messages: list[MessageRecord], pairs: list[tuple[int, int]]
) -> list[Violation]:
    return [
        Violation(
            kind=kind,
            pair=(messages[i].msg_id, messages[j].msg_id),
            entity=messages[i].actuator,
            group=messages[i].group,
        )
        for i, j in pairs
    ]


def _sorted(violations: list[Violation]) -> list[Violation]:
    return sorted(violations, key=lambda v: (v.group, v.pair))


def _start(trace: Trace, kind: str) -> None:
    if trace.is_empty:
        raise EmptyTraceError("Trace has no messages", context={"detector": kind})
    _require_complete(trace.messages)


def detect_p1(trace: Trace) -> list[Violation]:
    """Same source and actuator, different commands, received out of creation order.

    Raises EmptyTraceError, IncompleteMessageError.
    """
    _start(trace, "P1")
    found: list[Violation] = []
    for bucket in _partition(trace.messages, "actuator"):
        pairs = _inverted_pairs(bucket, same_source=True, same_actuator=True)
        found.extend(_violations("P1", bucket, pairs))
    return _sorted(found)


def detect_p2(trace: Trace) -> list[Violation]:
    """Different sources, same actuator, different commands, received out of order.

    Raises EmptyTraceError, IncompleteMessageError.
    """
    _start(trace, "P2")
    found: list[Violation] = []
    for bucket in _partition(trace.messages, "actuator"):
        pairs = _inverted_pairs(bucket, same_source=False, same_actuator=True)
        found.extend(_violations("P2", bucket, pairs))
    return _sorted(found)


def check_relations(trace: Trace, relations: Iterable[TemporalRelation]) -> None:
    """Raises ConfigurationError if a relation names an actuator the trace's topology lacks."""
    for relation in relations:
        trace.topology.validate_relation(relation)


def detect_p3(
    trace: Trace, relations: Sequence[TemporalRelation] | None = None
) -> list[Violation]:
    """Temporally related commands of different actuators received out of order.

    Relations default to those declared by the trace's scenario.

    Raises EmptyTraceError, IncompleteMessageError, ConfigurationError.
    """
    _start(trace, "P3")
    relations = trace.scenario.relations if relations is None else relations
    check_relations(trace, relations)
    found: set[Violation] = set()
    for relation in relations:
        related = [m for m in trace.messages if relation.covers(m.actuator, m.command)]
        for bucket in _partition(related, "group"):
            pairs = _inverted_pairs(bucket, same_source=None, same_actuator=False)
            found.update(_violations("P3", bucket, pairs))
    return _sorted(list(found))


def detect(
    trace: Trace, kind: ViolationKind, relations: Sequence[TemporalRelation] | None = None
) -> list[Violation]:
    """Run one detector by name."""
    if kind == "P1":
        return detect_p1(trace)
    if kind == "P2":
        return detect_p2(trace)
    return detect_p3(trace, relations)


def brute_force(
    trace: Trace, kind: ViolationKind, relations: Sequence[TemporalRelation] | None = None
) -> list[Violation]:
    """Literal evaluation of a predicate over every ordered message pair."""
    if kind == "P3":
        relations = trace.scenario.relations if relations is None else relations
    found: list[Violation] = []
    for mi in trace.messages:
        for mj in trace.messages:
            if mi.msg_id == mj.msg_id or mi.group != mj.group:
                continue
            if mi.ta is None or mj.ta is None:
                raise IncompleteMessageError(mi.msg_id if mi.ta is None else mj.msg_id)
            if not (mi.ts > mj.ts and mi.ta < mj.ta):
                continue
            if kind == "P1":
                hit = (
                    mi.source == mj.source
                    and mi.actuator == mj.actuator
                    and mi.command != mj.command
                )
            elif kind == "P2":
                hit = (
                    mi.source != mj.source
                    and mi.actuator == mj.actuator
                    and mi.command != mj.command
                )
            else:
                hit = mi.actuator != mj.actuator and any(
                    r.covers(mi.actuator, mi.command) and r.covers(mj.actuator, mj.command)
                    for r in relations or ()
                )
            if hit:
                found.append(
                    Violation(
                        kind=kind, pair=(mi.msg_id, mj.msg_id), entity=mi.actuator, group=mi.group
                    )
                )
    return _sorted(found)
