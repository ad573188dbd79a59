"""Factory functions for detector and rate tests."""

import numpy as np

from python.domain.home.models import EventSpec, Hop, MessageRecord, TemporalRelation
from python.domain.home.topology import Topology
from python.domain.scenario.models import ScenarioConfig, ScenarioGroup, StimulusTemplate, Trace

RELATIONS = [
    TemporalRelation(commands=(("window-shade", "open"), ("window", "open"))),
    TemporalRelation(commands=(("window", "close"), ("window-shade", "close"))),
]

_SOURCES = ("mobile-app", "motion-sensor", "google-assistant")
_ACTUATORS = ("window", "window-shade", "smart-lock")
_COMMANDS = ("open", "close")


def make_message(
    msg_id: int,
    ts: float,
    ta: float,
    actuator: str = "smart-oven",
    command: str = "on",
    source: str = "mobile-app",
    event_name: str = "e",
    group: str = "default",
    hops: list[Hop] | None = None,
    shared_hops: int = 0,
    transit_id: int | None = None,
) -> MessageRecord:
    """A message whose only logged hop is its actuator arrival, unless hops are given."""
    return MessageRecord(
        msg_id=msg_id,
        group=group,
        rule_id="R",
        transit_id=msg_id if transit_id is None else transit_id,
        event=EventSpec(source=source, name=event_name, ts=ts),
        actuator=actuator,
        command=command,
        shared_hops=shared_hops,
        hops=hops if hops is not None else [Hop(component=actuator, time=ta)],
        ta=ta,
    )


def make_trace(
    messages: list[MessageRecord],
    groups: tuple[str, ...] = ("default",),
    relations: list[TemporalRelation] | None = None,
) -> Trace:
    scenario = ScenarioConfig(
        groups=[
            ScenarioGroup(
                name=name,
                app_ids=["M1"],
                streams=[[StimulusTemplate(source="mobile-app", name="e")]],
                relations=relations or [],
            )
            for name in groups
        ]
    )
    return Trace(messages=messages, topology=Topology.default(), scenario=scenario)


def make_random_trace(rng: np.random.Generator, n: int) -> Trace:
    """Random complete trace on coarse time grids so ties occur."""
    messages = []
    for msg_id in range(n):
        ts = float(rng.integers(0, 20)) * 0.25
        ta = ts + float(rng.integers(1, 12)) * 0.25
        messages.append(
            make_message(
                msg_id,
                ts,
                ta,
                actuator=str(rng.choice(_ACTUATORS)),
                command=str(rng.choice(_COMMANDS)),
                source=str(rng.choice(_SOURCES)),
                group=str(rng.choice(("g0", "g1"))),
            )
        )
    return make_trace(messages, groups=("g0", "g1"), relations=RELATIONS)
