"""JSON-lines trace files: a header line, then one record per hop arrival."""

import logging
from collections import defaultdict
from pathlib import Path

from pydantic import ValidationError

from python.domain.home.models import EventSpec, Hop, MessageRecord, TerminatedEvent
from python.domain.scenario.models import Trace

from .exceptions import TraceFileError
from .models import SCHEMA_VERSION, TraceFileRecord, TraceHeader

logger = logging.getLogger(__name__)


def _message_records(message: MessageRecord) -> list[TraceFileRecord]:
    base = {
        "kind": "message",
        "msg_id": message.msg_id,
        "transit_id": message.transit_id,
        "group": message.group,
        "rule_id": message.rule_id,
        "source": message.event.source,
        "event": message.event.name,
        "value": message.event.value,
        "unit": message.event.unit,
        "event_ts": message.event.ts,
        "actuator": message.actuator,
        "command": message.command,
        "issue_offset": message.issue_offset,
        "shared_hops": message.shared_hops,
        "ta": message.ta,
    }
    if not message.hops:
        return [TraceFileRecord.model_validate(base)]
    return [
        TraceFileRecord.model_validate(
            {**base, "hop": index, "component": hop.component, "arrival": hop.time}
        )
        for index, hop in enumerate(message.hops)
    ]


def _terminated_records(event: TerminatedEvent) -> list[TraceFileRecord]:
    base = {
        "kind": "terminated",
        "transit_id": event.transit_id,
        "group": event.group,
        "rule_id": event.rule_id,
        "source": event.event.source,
        "event": event.event.name,
        "value": event.event.value,
        "unit": event.event.unit,
        "event_ts": event.event.ts,
    }
    if not event.hops:
        return [TraceFileRecord.model_validate(base)]
    return [
        TraceFileRecord.model_validate(
            {**base, "hop": index, "component": hop.component, "arrival": hop.time}
        )
        for index, hop in enumerate(event.hops)
    ]


def trace_records(trace: Trace) -> list[TraceFileRecord]:
    """All hop records of a trace, sorted by arrival time."""
    records = [r for message in trace.messages for r in _message_records(message)]
    records += [r for event in trace.terminated for r in _terminated_records(event)]
    return sorted(records, key=lambda record: record.sort_key)


def write_trace(trace: Trace, path: Path) -> Path:
    """Write a trace; identical traces produce byte-identical files."""
    path.parent.mkdir(parents=True, exist_ok=True)
    header = TraceHeader(seed=trace.seed, topology=trace.topology, scenario=trace.scenario)
    records = trace_records(trace)
    with path.open("w", encoding="utf-8", newline="\n") as f:
        f.write(header.model_dump_json() + "\n")
        for record in records:
            f.write(record.model_dump_json() + "\n")
    logger.info(f"Wrote trace {path} ({len(trace.messages)} messages, {len(records)} hops)")
    return path


def _event(record: TraceFileRecord) -> EventSpec:
    return EventSpec(
        source=record.source,
        name=record.event,
        value=record.value,
        unit=record.unit,
        ts=record.event_ts,
    )


def _hops(records: list[TraceFileRecord]) -> list[Hop]:
    ordered = sorted(records, key=lambda r: -1 if r.hop is None else r.hop)
    return [
        Hop(component=r.component, time=r.arrival)
        for r in ordered
        if r.component is not None and r.arrival is not None
    ]


def _rebuild_message(msg_id: int, records: list[TraceFileRecord]) -> MessageRecord:
    first = records[0]
    if first.actuator is None or first.command is None:
        raise ValueError(f"message {msg_id} has no actuator command")
    return MessageRecord(
        msg_id=msg_id,
        group=first.group,
        rule_id=first.rule_id,
        transit_id=first.transit_id,
        event=_event(first),
        actuator=first.actuator,
        command=first.command,
        issue_offset=first.issue_offset,
        shared_hops=first.shared_hops,
        hops=_hops(records),
        ta=first.ta,
    )


def _rebuild_terminated(transit_id: int, records: list[TraceFileRecord]) -> TerminatedEvent:
    first = records[0]
    return TerminatedEvent(
        transit_id=transit_id,
        group=first.group,
        rule_id=first.rule_id,
        event=_event(first),
        hops=_hops(records),
    )


def read_trace(path: Path) -> Trace:
    """Parse a trace file written by ``write_trace``.

    Raises TraceFileError.
    """
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise TraceFileError(f"Cannot read trace: {e}", context={"path": str(path)}) from e
    except UnicodeDecodeError as e:
        raise TraceFileError(
            f"Trace is not UTF-8: {e.reason} at byte {e.start}", context={"path": str(path)}
        ) from e
    if not lines:
        raise TraceFileError("Trace file is empty", context={"path": str(path)})

    try:
        header = TraceHeader.model_validate_json(lines[0])
    except ValidationError as e:
        raise TraceFileError(
            f"Invalid trace header: {e}", context={"path": str(path), "line": "1"}
        ) from e
    if header.schema_version != SCHEMA_VERSION:
        raise TraceFileError(
            f"Unsupported trace schema version {header.schema_version}",
            context={"path": str(path), "line": "1"},
        )

    messages: dict[int, list[TraceFileRecord]] = defaultdict(list)
    terminated: dict[int, list[TraceFileRecord]] = defaultdict(list)
    for number, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        try:
            record = TraceFileRecord.model_validate_json(line)
        except ValidationError as e:
            raise TraceFileError(
                f"Invalid trace record: {e}", context={"path": str(path), "line": str(number)}
            ) from e
        if record.kind == "message":
            if record.msg_id is None:
                raise TraceFileError(
                    "Message record without msg_id",
                    context={"path": str(path), "line": str(number)},
                )
            messages[record.msg_id].append(record)
        else:
            terminated[record.transit_id].append(record)

    try:
        trace = Trace(
            messages=[_rebuild_message(i, messages[i]) for i in sorted(messages)],
            terminated=[_rebuild_terminated(i, terminated[i]) for i in sorted(terminated)],
            topology=header.topology,
            scenario=header.scenario,
            seed=header.seed,
        )
    except (ValidationError, ValueError) as e:
        raise TraceFileError(f"Inconsistent trace: {e}", context={"path": str(path)}) from e
    logger.info(f"Read trace {path} ({len(trace.messages)} messages)")
    return trace
