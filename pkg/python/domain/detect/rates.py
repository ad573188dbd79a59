"""Per-entity misordered-arrival rates.

Arrivals are grouped into streams keyed by (group, entity, visit, subject); a
message passing the same component twice lands in two streams. Hops an event
transit travelled before its host split it into several commands are counted
once. Within a stream, arrivals are ordered by arrival time, ties broken by
origin ts, so simultaneous arrivals never count as inverted.

``adjacent`` and ``any`` pool every arrival of a group at an entity into one
stream. ``state`` follows one subject at a time: the events of one source, or
the commands of one actuator. A stream counts the positions where the observed
sequence of event labels or actuator states differs from the sequence in
creation order; a stream that only ever carries one label has no observable
order and yields no rate.

At the final hop, actuators bound by a group's temporal relations share one
stream named after all of them, joined with ``+``.
"""

import logging
from collections import defaultdict
from collections.abc import Iterable

import numpy as np

from python.domain.home.models import ComponentKind, TemporalRelation
from python.domain.home.topology import Topology
from python.domain.scenario.models import Trace

from .exceptions import EmptyTraceError, UndefinedRateError
from .models import Carrier, EntityClass, EntityRate, RateMode

logger = logging.getLogger(__name__)

StreamKey = tuple[str, str, int, str]  # group, entity, visit, subject
POOLED = "*"

_KIND_CLASS: dict[ComponentKind, EntityClass] = {
    "edge": "edge",
    "user-iot-cloud": "user-cloud",
    "trigger-action-cloud": "trigger-action-cloud",
    "vendor-cloud": "vendor-cloud",
    "actuator": "actuator",
}


class ArrivalStream:
    """Arrival times, origin timestamps and labels observed at one entity."""

    def __init__(self) -> None:
        self.times: list[float] = []
        self.origins: list[float] = []
        self.labels: list[str] = []
        self.terminal = False
        self._carriers: set[str] = set()

    def add(
        self,
        time: float,
        origin: float,
        label: str = "",
        *,
        carrier: Carrier = "command",
        terminal: bool = False,
    ) -> None:
        self.times.append(time)
        self.origins.append(origin)
        self.labels.append(label)
        self._carriers.add(carrier)
        self.terminal = self.terminal or terminal

    def __len__(self) -> int:
        return len(self.times)

    @property
    def carrier(self) -> Carrier:
        if self._carriers == {"event"}:
            return "event"
        if self._carriers == {"command"}:
            return "command"
        return "mixed"

    def arrival_order(self) -> np.ndarray:
        times = np.asarray(self.times, dtype=np.float64)
        origins = np.asarray(self.origins, dtype=np.float64)
        return np.lexsort((np.arange(len(times)), origins, times))

    def origins_in_arrival_order(self) -> np.ndarray:
        return np.asarray(self.origins, dtype=np.float64)[self.arrival_order()]

    def observable(self, mode: RateMode) -> bool:
        """Whether the stream can show misordering under the counting mode."""
        if mode == "state":
            return len(set(self.labels)) > 1
        return len(self) > 0

    def misordered(self, mode: RateMode) -> int:
        if mode != "state":
            return count_misordered(self.origins_in_arrival_order(), mode)
        labels = np.asarray(self.labels, dtype=object)
        created = np.argsort(np.asarray(self.origins, dtype=np.float64), kind="stable")
        return count_state_mismatches(labels[self.arrival_order()], labels[created])


def count_misordered(origins: np.ndarray, mode: RateMode = "adjacent") -> int:
    """Count misordered arrivals given origin timestamps in arrival order.

    ``adjacent`` flags an arrival whose immediate predecessor was created
    strictly later; ``any`` flags an arrival created strictly later than some
    arrival that follows it.

    Raises ValueError.
    """
    if mode == "state":
        raise ValueError("state counting compares labels, not origin timestamps")
    if origins.size < 2:
        return 0
    if mode == "adjacent":
        return int(np.count_nonzero(origins[:-1] > origins[1:]))
    suffix_min = np.minimum.accumulate(origins[::-1])[::-1]
    return int(np.count_nonzero(origins[:-1] > suffix_min[1:]))


def count_state_mismatches(observed: np.ndarray, expected: np.ndarray) -> int:
    """Positions where the observed label sequence differs from the expected one."""
    return int(np.count_nonzero(observed != expected))


def relation_entities(relations: Iterable[TemporalRelation]) -> dict[str, str]:
    """Map each related actuator to the joint stream of its connected relations."""
    clusters: list[list[str]] = []
    for relation in relations:
        members = relation.actuators
        joined = [cluster for cluster in clusters if set(cluster) & set(members)]
        merged = list(dict.fromkeys([a for cluster in joined for a in cluster] + members))
        clusters = [cluster for cluster in clusters if cluster not in joined] + [merged]
    return {actuator: "+".join(cluster) for cluster in clusters for actuator in cluster}


def arrival_streams(trace: Trace, mode: RateMode = "adjacent") -> dict[StreamKey, ArrivalStream]:
    """Collect every hop arrival of the trace into (group, entity, visit, subject) streams."""
    streams: dict[StreamKey, ArrivalStream] = defaultdict(ArrivalStream)
    shared_seen: set[tuple[str, int, int]] = set()
    joint = {group.name: relation_entities(group.relations) for group in trace.scenario.groups}
    by_subject = mode == "state"

    for message in sorted(trace.messages, key=lambda m: m.msg_id):
        visits: dict[str, int] = defaultdict(int)
        last = len(message.hops) - 1
        actuator = joint.get(message.group, {}).get(message.actuator, message.actuator)
        for index, hop in enumerate(message.hops):
            visit = visits[hop.component]
            visits[hop.component] += 1
            terminal = message.complete and index == last
            entity = actuator if terminal else hop.component
            if index < message.shared_hops:
                key = (message.group, message.transit_id, index)
                if key in shared_seen:
                    continue
                shared_seen.add(key)
                subject = message.source if by_subject else POOLED
                streams[(message.group, entity, visit, subject)].add(
                    hop.time, message.event.ts, message.event.label, carrier="event"
                )
                continue
            subject = actuator if by_subject else POOLED
            streams[(message.group, entity, visit, subject)].add(
                hop.time,
                message.ts,
                f"{message.actuator}:{message.state}",
                carrier="command",
                terminal=terminal,
            )

    for event in sorted(trace.terminated, key=lambda t: t.transit_id):
        visits = defaultdict(int)
        subject = event.event.source if by_subject else POOLED
        for hop in event.hops:
            visit = visits[hop.component]
            visits[hop.component] += 1
            streams[(event.group, hop.component, visit, subject)].add(
                hop.time, event.event.ts, event.event.label, carrier="event"
            )

    return dict(streams)


def classify(topology: Topology, entity: str, *, terminal: bool = False) -> EntityClass:
    """Entity class of a component; a message's final hop is always an actuator."""
    if terminal:
        return "actuator"
    kind = topology.kind_of(entity)
    if kind not in _KIND_CLASS:
        raise ValueError(f"{entity} ({kind}) never receives messages")
    return _KIND_CLASS[kind]


def misordered_rate(
    trace: Trace,
    entity: str,
    *,
    group: str | None = None,
    mode: RateMode = "adjacent",
    visit: int = 0,
) -> float:
    """Percentage of misordered arrivals at an entity.

    With no group, each group is ordered on its own and the counts are pooled.
    An actuator bound by a temporal relation reports its joint stream.

    Raises EmptyTraceError, UndefinedRateError.
    """
    if trace.is_empty:
        raise EmptyTraceError("Trace has no messages", context={"scenario": trace.scenario.name})
    total = 0
    misordered = 0
    streams = arrival_streams(trace, mode)
    for (stream_group, stream_entity, stream_visit, _), stream in streams.items():
        if entity not in stream_entity.split("+") or stream_visit != visit:
            continue
        if group is not None and stream_group != group:
            continue
        if not stream.observable(mode):
            continue
        total += len(stream)
        misordered += stream.misordered(mode)
    if total == 0:
        raise UndefinedRateError(
            f"No arrivals at {entity}",
            context={"entity": entity, "group": group or "*", "visit": str(visit)},
        )
    return 100.0 * misordered / total


def entity_rates(trace: Trace, mode: RateMode = "adjacent") -> list[EntityRate]:
    """Rates for every observable stream, in group, entity, visit then subject order.

    Raises EmptyTraceError.
    """
    if trace.is_empty:
        raise EmptyTraceError("Trace has no messages", context={"scenario": trace.scenario.name})
    group_order = {name: index for index, name in enumerate(trace.groups)}
    rates: list[EntityRate] = []
    for (group, entity, visit, subject), stream in arrival_streams(trace, mode).items():
        if not stream.observable(mode):
            continue
        rates.append(
            EntityRate(
                group=group,
                entity=entity,
                visit=visit,
                entity_class=classify(trace.topology, entity, terminal=stream.terminal),
                subject=subject,
                carrier=stream.carrier,
                total=len(stream),
                misordered=stream.misordered(mode),
            )
        )
    rates.sort(
        key=lambda r: (
            group_order.get(r.group, len(group_order)),
            r.entity,
            r.visit,
            r.subject,
        )
    )
    logger.debug(f"Computed {len(rates)} entity rates ({mode}) for {trace.scenario.name}")
    return rates
