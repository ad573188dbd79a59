"""On-disk records of the trace file format."""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from python.domain.home.models import Seconds
from python.domain.home.topology import Topology
from python.domain.scenario.models import ScenarioConfig

SCHEMA_VERSION = 1


class TraceHeader(BaseModel):
    """First line of a trace file."""

    model_config = ConfigDict(frozen=True)

    schema_version: int = SCHEMA_VERSION
    seed: int = Field(ge=0)
    topology: Topology
    scenario: ScenarioConfig


class TraceFileRecord(BaseModel):
    """One hop arrival of a message (or of an event transit that matched no handler).

    Every record repeats the message tuple so each line reads on its own.
    A message that never left its source is written as one record without a
    component.
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["message", "terminated"] = "message"
    msg_id: int | None = None
    transit_id: int
    group: str
    rule_id: str
    source: str
    event: str
    value: float | None = None
    unit: str | None = None
    event_ts: Seconds
    actuator: str | None = None
    command: str | None = None
    issue_offset: Seconds = 0.0
    shared_hops: int = 0
    ta: Seconds | None = None
    hop: int | None = None
    component: str | None = None
    arrival: Seconds | None = None

    @property
    def sort_key(self) -> tuple[float, int, int, int]:
        carrier = self.msg_id if self.msg_id is not None else self.transit_id
        return (
            -1.0 if self.arrival is None else self.arrival,
            0 if self.kind == "message" else 1,
            carrier,
            -1 if self.hop is None else self.hop,
        )
