"""Factory functions for smart-home model tests."""

from ..models import Action, AppRule, EventSpec, Handler, Hop, MessageRecord, Trigger


def make_event(
    source: str = "mobile-app",
    name: str = "oven-on-click",
    ts: float = 0.0,
    value: float | None = None,
    unit: str | None = None,
) -> EventSpec:
    return EventSpec(source=source, name=name, value=value, unit=unit, ts=ts)


def make_rule(
    rule_id: str = "R1",
    source: str = "mobile-app",
    event: str = "oven-on-click",
    actuator: str = "smart-oven",
    command: str = "on",
    path: tuple[str, ...] = ("iot-cloud", "edge-hub", "smart-oven"),
    host: str | None = None,
) -> AppRule:
    handler = Handler(
        trigger=Trigger(source=source, event=event),
        actions=(Action(actuator=actuator, command=command, path=path),),
    )
    return AppRule(id=rule_id, handlers=(handler,), host=host)


def make_message(
    msg_id: int = 0,
    ts: float = 0.0,
    hop_times: tuple[float, ...] = (1.0, 2.0, 3.0),
    components: tuple[str, ...] = ("iot-cloud", "edge-hub", "smart-oven"),
    shared_hops: int = 1,
) -> MessageRecord:
    hops = [Hop(component=c, time=t) for c, t in zip(components, hop_times, strict=True)]
    return MessageRecord(
        msg_id=msg_id,
        rule_id="R1",
        event=make_event(ts=ts),
        actuator=components[-1],
        command="on",
        shared_hops=shared_hops,
        hops=hops,
        ta=hops[-1].time if hops else None,
    )
