"""Pydantic models for the smart-home device inventory, app rules and messages."""

import re
from typing import Annotated, Literal

from pydantic import (
    AfterValidator,
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    field_validator,
    model_validator,
)

ComponentKind = Literal[
    "sensor",
    "mobile-app",
    "voice-assistant",
    "actuator",
    "edge",
    "user-iot-cloud",
    "vendor-cloud",
    "trigger-action-cloud",
]

# Link rows are keyed by endpoint class; sensors, actuators and voice
# assistants all count as "IoT devices" on the wire.
EndpointClass = Literal[
    "iot-device",
    "edge",
    "user-iot-cloud",
    "vendor-cloud",
    "mobile-app",
    "trigger-action-cloud",
]

EVENT_SOURCE_KINDS: frozenset[str] = frozenset({"sensor", "mobile-app", "voice-assistant"})
DISPATCH_KINDS: frozenset[str] = frozenset({"user-iot-cloud", "trigger-action-cloud"})

# Commands that drive an actuator into a named on/off state.
COMMAND_STATES: dict[str, str] = {"start": "on", "set": "on", "stop": "off", "clear": "off"}

_ENDPOINT_CLASS: dict[str, EndpointClass] = {
    "sensor": "iot-device",
    "actuator": "iot-device",
    "voice-assistant": "iot-device",
    "edge": "edge",
    "user-iot-cloud": "user-iot-cloud",
    "vendor-cloud": "vendor-cloud",
    "mobile-app": "mobile-app",
    "trigger-action-cloud": "trigger-action-cloud",
}

TIME_PRECISION = 6  # microseconds


def quantize(seconds: float) -> float:
    """Round a virtual time to microsecond precision."""
    return round(float(seconds), TIME_PRECISION)


Seconds = Annotated[float, AfterValidator(quantize)]


def endpoint_class(kind: str) -> EndpointClass:
    """Map a component kind to the endpoint class used by link rows."""
    return _ENDPOINT_CLASS[kind]


class ComponentSpec(BaseModel):
    """A node of the deployment: device, app, edge hub or cloud."""

    model_config = ConfigDict(frozen=True)

    id: str = Field(min_length=1)
    kind: ComponentKind
    vendor: str | None = None

    @property
    def endpoint(self) -> EndpointClass:
        return endpoint_class(self.kind)


class LinkDelayModel(BaseModel):
    """Gaussian processing-plus-network delay between two endpoint classes."""

    model_config = ConfigDict(frozen=True)

    endpoint_kinds: tuple[EndpointClass, EndpointClass]
    mean: float = Field(gt=0)  # seconds
    std: float = Field(ge=0)  # seconds

    @field_validator("endpoint_kinds")
    @classmethod
    def _normalize_pair(
        cls, value: tuple[EndpointClass, EndpointClass]
    ) -> tuple[EndpointClass, EndpointClass]:
        a, b = sorted(value)
        return (a, b)  # type: ignore[return-value]

    @property
    def variance(self) -> float:
        return self.std**2

    def connects(self, a: EndpointClass, b: EndpointClass) -> bool:
        """Whether this row covers the unordered pair (a, b)."""
        return self.endpoint_kinds == tuple(sorted((a, b)))

    def __repr__(self) -> str:
        a, b = self.endpoint_kinds
        return f"LinkDelayModel({a} <-> {b}, {self.mean} ± {self.std} s)"


class EventSpec(BaseModel):
    """A state report or user stimulus: source s, event e, creation time ts."""

    model_config = ConfigDict(frozen=True)

    source: str
    name: str
    value: float | None = None
    unit: str | None = None
    ts: Seconds = Field(ge=0)

    def __repr__(self) -> str:
        value = f"={self.value}{self.unit or ''}" if self.value is not None else ""
        return f"EventSpec({self.source}:{self.name}{value} @ {self.ts:.6f}s)"

    @property
    def label(self) -> str:
        """Name and value, without the creation time."""
        return self.name if self.value is None else f"{self.name}={self.value:g}"


# Value predicates

PredicateOp = Literal["<", "<=", ">", ">=", "="]

_OP_ALIASES: dict[str, PredicateOp] = {
    "<": "<",
    "<=": "<=",
    "≤": "<=",
    ">": ">",
    ">=": ">=",
    "≥": ">=",
    "=": "=",
    "==": "=",
}

_PREDICATE_PATTERN = re.compile(
    r"^\s*(?P<op><=|>=|==|≤|≥|<|>|=)\s*(?P<threshold>[-+]?\d+(?:\.\d+)?)\s*(?P<unit>\S.*)?$"
)


def _parse_predicate(value: object) -> object:
    """Accept predicate strings such as '> 30 °C' alongside mappings."""
    if not isinstance(value, str):
        return value
    match = _PREDICATE_PATTERN.match(value)
    if match is None:
        raise ValueError(f"invalid value predicate: {value!r}")
    unit = match.group("unit")
    return {
        "op": _OP_ALIASES[match.group("op")],
        "threshold": float(match.group("threshold")),
        "unit": unit.strip() if unit else None,
    }


class ValuePredicate(BaseModel):
    """Comparison of an event's scalar value against one threshold."""

    model_config = ConfigDict(frozen=True)

    op: PredicateOp
    threshold: float
    unit: str | None = None

    @field_validator("op", mode="before")
    @classmethod
    def _alias_op(cls, value: object) -> object:
        if isinstance(value, str):
            return _OP_ALIASES.get(value, value)
        return value

    def holds(self, value: float | None) -> bool:
        if value is None:
            return False
        match self.op:
            case "<":
                return value < self.threshold
            case "<=":
                return value <= self.threshold
            case ">":
                return value > self.threshold
            case ">=":
                return value >= self.threshold
            case "=":
                return value == self.threshold

    def __str__(self) -> str:
        unit = f" {self.unit}" if self.unit else ""
        return f"{self.op} {self.threshold:g}{unit}"


# App rules


class Trigger(BaseModel):
    """Event subscription: source id, event name and optional value predicate."""

    model_config = ConfigDict(frozen=True)

    source: str
    event: str
    predicate: Annotated[ValuePredicate | None, BeforeValidator(_parse_predicate)] = None

    def subscribes(self, event: EventSpec) -> bool:
        return self.source == event.source and self.event == event.name

    def matches(self, event: EventSpec) -> bool:
        if not self.subscribes(event):
            return False
        return self.predicate is None or self.predicate.holds(event.value)


class Action(BaseModel):
    """One actuation command and the component path its message travels."""

    model_config = ConfigDict(frozen=True)

    actuator: str
    command: str
    # From the component after the event source up to the actuator.
    path: tuple[str, ...] = Field(min_length=1)

    @model_validator(mode="after")
    def _path_ends_at_actuator(self) -> "Action":
        if self.path[-1] != self.actuator:
            raise ValueError(
                f"path for {self.actuator}/{self.command} ends at {self.path[-1]}"
            )
        return self


class Handler(BaseModel):
    """A trigger and the ordered actions it causes."""

    model_config = ConfigDict(frozen=True)

    trigger: Trigger
    actions: tuple[Action, ...] = Field(min_length=1)


class AppRule(BaseModel):
    """A trigger-action app: handlers, host cloud and experiment tags."""

    model_config = ConfigDict(frozen=True)

    id: str
    description: str = ""
    handlers: tuple[Handler, ...] = Field(min_length=1)
    # Host cloud evaluating the rule; derived from the path when omitted.
    host: str | None = None
    experiments: frozenset[int] = frozenset()

    @property
    def trigger(self) -> Trigger:
        return self.handlers[0].trigger

    @property
    def actions(self) -> tuple[Action, ...]:
        return self.handlers[0].actions

    @property
    def paths(self) -> list[tuple[str, ...]]:
        return [action.path for handler in self.handlers for action in handler.actions]

    @property
    def sources(self) -> list[str]:
        return list(dict.fromkeys(handler.trigger.source for handler in self.handlers))

    @property
    def actuators(self) -> list[str]:
        return list(
            dict.fromkeys(a.actuator for handler in self.handlers for a in handler.actions)
        )

    def subscribes(self, event: EventSpec) -> bool:
        """Whether the event reaches this rule's host (predicate not checked)."""
        return any(handler.trigger.subscribes(event) for handler in self.handlers)

    def matching_handlers(self, event: EventSpec) -> list[Handler]:
        return [handler for handler in self.handlers if handler.trigger.matches(event)]

    def __repr__(self) -> str:
        return f"AppRule({self.id!r}, handlers={len(self.handlers)}, host={self.host!r})"


class TemporalRelation(BaseModel):
    """Commands of different actuators that must be received in declared order."""

    model_config = ConfigDict(frozen=True)

    commands: tuple[tuple[str, str], ...] = Field(min_length=2)

    @property
    def actuators(self) -> list[str]:
        return list(dict.fromkeys(actuator for actuator, _ in self.commands))

    def covers(self, actuator: str, command: str) -> bool:
        return (actuator, command) in self.commands


# Messages


class Hop(BaseModel):
    """Arrival of a message at one component."""

    model_config = ConfigDict(frozen=True)

    component: str
    time: Seconds


class MessageRecord(BaseModel):
    """The end-to-end tuple m = <s, e, a, c, ts, ta> plus its hop log."""

    msg_id: int = Field(ge=0)
    group: str = "default"
    rule_id: str
    transit_id: int = Field(default=0, ge=0)
    event: EventSpec
    actuator: str
    command: str
    # Commands of one handler leave the host in declared order.
    issue_offset: Seconds = Field(default=0.0, ge=0)
    # Leading hops travelled as the event, shared with sibling commands.
    shared_hops: int = Field(default=0, ge=0)
    hops: list[Hop] = Field(default_factory=list)
    ta: Seconds | None = None

    @model_validator(mode="after")
    def _check_hops(self) -> "MessageRecord":
        times = [hop.time for hop in self.hops]
        if any(b <= a for a, b in zip(times, times[1:], strict=False)):
            raise ValueError(f"hop times of message {self.msg_id} are not increasing")
        if self.ta is not None and (not self.hops or self.hops[-1].time != self.ta):
            raise ValueError(f"ta of message {self.msg_id} differs from final hop")
        if self.shared_hops > len(self.hops):
            raise ValueError(f"message {self.msg_id} shares more hops than it has")
        return self

    @property
    def source(self) -> str:
        return self.event.source

    @property
    def ts(self) -> float:
        return quantize(self.event.ts + self.issue_offset)

    @property
    def state(self) -> str:
        """Actuator state the command leaves behind."""
        return COMMAND_STATES.get(self.command, self.command)

    @property
    def complete(self) -> bool:
        return self.ta is not None

    def __repr__(self) -> str:
        ta = f"{self.ta:.6f}" if self.ta is not None else "in-flight"
        return (
            f"MessageRecord(#{self.msg_id}, {self.source}:{self.event.name} -> "
            f"{self.actuator}:{self.command}, ts={self.ts:.6f}, ta={ta})"
        )


class TerminatedEvent(BaseModel):
    """An event transit whose host cloud found no matching handler."""

    transit_id: int = Field(ge=0)
    group: str = "default"
    rule_id: str
    event: EventSpec
    hops: list[Hop] = Field(default_factory=list)
