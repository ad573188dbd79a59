"""Scenario configuration and the trace a run produces."""

from typing import Literal, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from python.domain.home.models import (
    AppRule,
    ComponentSpec,
    EventSpec,
    LinkDelayModel,
    MessageRecord,
    Seconds,
    TemporalRelation,
    TerminatedEvent,
    quantize,
)
from python.domain.home.topology import Topology

DEFAULT_N_EVENTS = 50
DEFAULT_ACTION_STAGGER = 0.001  # seconds between commands issued by one handler

Pacing = Literal["shared", "per-source"]


class StimulusTemplate(BaseModel):
    """An event to emit without its timestamp."""

    model_config = ConfigDict(frozen=True)

    source: str
    name: str
    value: float | None = None
    unit: str | None = None

    def at(self, ts: float) -> EventSpec:
        return EventSpec(
            source=self.source, name=self.name, value=self.value, unit=self.unit, ts=ts
        )


class ScenarioGroup(BaseModel):
    """Apps simulated together in one isolated run; the comparison group for rates.

    Stimuli are emitted round-robin over ``streams``: in round ``j`` stream ``i``
    emits template ``(i + j) mod len(stream)``, so a single stream simply cycles.
    With ``shared`` pacing consecutive emissions are one period apart. With
    ``per-source`` pacing each of several streams fires once every
    ``period * (1 + 1 / width)``, the emissions of a round spread evenly over it.
    ``events`` replaces the generated stimuli entirely.
    """

    model_config = ConfigDict(frozen=True)

    name: str = Field(min_length=1)
    app_ids: list[str] = Field(min_length=1)
    streams: list[list[StimulusTemplate]] = Field(default_factory=list)
    events: list[EventSpec] = Field(default_factory=list)
    # Events per stream; the scenario default applies when absent.
    n_events: int | None = Field(default=None, ge=1)
    relations: list[TemporalRelation] = Field(default_factory=list)
    pacing: Pacing = "shared"

    @model_validator(mode="after")
    def _has_stimuli(self) -> Self:
        if not self.events and not any(self.streams):
            raise ValueError(f"group {self.name} defines neither streams nor events")
        if any(not stream for stream in self.streams):
            raise ValueError(f"group {self.name} has an empty stream")
        return self

    def expand(self, n_events: int, period: float) -> list[EventSpec]:
        """Timed events of this group, in emission order."""
        if self.events:
            return sorted(self.events, key=lambda event: event.ts)
        per_stream = self.n_events or n_events
        width = len(self.streams)
        spacing = period
        if self.pacing == "per-source" and width > 1:
            spacing = period * (width + 1) / width**2
        events: list[EventSpec] = []
        for k in range(per_stream * width):
            round_, i = divmod(k, width)
            stream = self.streams[i]
            events.append(stream[(i + round_) % len(stream)].at(quantize(k * spacing)))
        return events


class ScenarioConfig(BaseModel):
    """Everything needed to reproduce one simulation run."""

    name: str = "custom"
    experiment: int | None = Field(default=None, ge=1, le=3)
    n_events: int = Field(default=DEFAULT_N_EVENTS, ge=1)
    period: Seconds = Field(default=0.25, gt=0)
    seed: int = Field(default=0, ge=0)
    groups: list[ScenarioGroup] = Field(min_length=1)
    threshold_overrides: dict[str, float] = Field(default_factory=dict)
    link_overrides: list[LinkDelayModel] = Field(default_factory=list)
    components: list[ComponentSpec] = Field(default_factory=list)
    # User-defined rules; an id already in the catalog replaces the built-in rule.
    rules: list[AppRule] = Field(default_factory=list)
    action_stagger: Seconds = Field(default=DEFAULT_ACTION_STAGGER, ge=0)

    @model_validator(mode="after")
    def _unique_groups(self) -> Self:
        names = [group.name for group in self.groups]
        if len(names) != len(set(names)):
            raise ValueError("scenario group names must be unique")
        return self

    @property
    def app_ids(self) -> list[str]:
        return list(dict.fromkeys(app for group in self.groups for app in group.app_ids))

    @property
    def relations(self) -> list[TemporalRelation]:
        return [relation for group in self.groups for relation in group.relations]

    def group(self, name: str) -> ScenarioGroup:
        for group in self.groups:
            if group.name == name:
                return group
        raise KeyError(name)


class Trace(BaseModel):
    """All messages of one run together with the topology and scenario that produced them."""

    messages: list[MessageRecord] = Field(default_factory=list)
    terminated: list[TerminatedEvent] = Field(default_factory=list)
    topology: Topology
    scenario: ScenarioConfig
    seed: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _unique_ids(self) -> Self:
        ids = [message.msg_id for message in self.messages]
        if len(ids) != len(set(ids)):
            raise ValueError("message ids must be unique within a trace")
        transits = [event.transit_id for event in self.terminated]
        if len(transits) != len(set(transits)):
            raise ValueError("terminated transit ids must be unique within a trace")
        return self

    @property
    def groups(self) -> list[str]:
        return [group.name for group in self.scenario.groups]

    @property
    def is_empty(self) -> bool:
        return not self.messages and not self.terminated

    @property
    def complete(self) -> bool:
        return all(message.complete for message in self.messages)

    def in_group(self, group: str) -> list[MessageRecord]:
        return [message for message in self.messages if message.group == group]

    def message(self, msg_id: int) -> MessageRecord:
        for message in self.messages:
            if message.msg_id == msg_id:
                return message
        raise KeyError(msg_id)
