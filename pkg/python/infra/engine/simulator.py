"""Deterministic discrete-event simulation of events and commands crossing the house.

Each scenario group runs in its own simpy environment with its own generator.
An event travels as one *transit* per subscribed rule from its source to the
rule's host cloud; the host evaluates the rule and issues one message per
action, which continues along the action's path to the actuator. Every hop
draws an independent delay, so messages may overtake each other on a link.
"""

import itertools
import logging
from collections.abc import Generator, Iterator
from typing import Any

import numpy as np
import simpy

from python.domain.apps.matching import subscribed_rules
from python.domain.home.exceptions import ConfigurationError
from python.domain.home.models import (
    DISPATCH_KINDS,
    EVENT_SOURCE_KINDS,
    AppRule,
    ComponentSpec,
    EventSpec,
    Hop,
    LinkDelayModel,
    MessageRecord,
    TerminatedEvent,
    quantize,
)
from python.domain.home.topology import Topology
from python.domain.scenario.models import ScenarioConfig, ScenarioGroup, Trace
from python.domain.scenario.resolve import group_rules, resolve_rules, resolve_topology

from .delays import group_generators, sample_hop_delay
from .exceptions import DeliveryError, SchedulingError, SimulationError
from .models import DeliveryLedger, EventArrival, SimClock

logger = logging.getLogger(__name__)

TIME_RESOLUTION = 1e-6

Process = Generator[simpy.Event, Any, None]


class GroupRun:
    """One isolated simpy run for a scenario group."""

    def __init__(
        self,
        group: ScenarioGroup,
        rules: list[AppRule],
        topology: Topology,
        rng: np.random.Generator,
        msg_ids: Iterator[int],
        transit_ids: Iterator[int],
        action_stagger: float,
    ) -> None:
        self.group = group
        self.rules = rules
        self.topology = topology
        self.rng = rng
        self.action_stagger = action_stagger
        self.env = simpy.Environment()
        self.clock = SimClock(self.env)
        self.ledger = DeliveryLedger(self.clock)
        self.messages: list[MessageRecord] = []
        self.terminated: list[TerminatedEvent] = []
        self._msg_ids = msg_ids
        self._transit_ids = transit_ids
        self._links: dict[tuple[str, str], LinkDelayModel] = {}
        self._routes: dict[int, tuple[str, ...]] = {}
        self._hosts: dict[int, str] = {}

    # Scheduling

    def inject_event(self, event: EventSpec) -> int:
        """Start one transit per subscribed rule at the event's creation time.

        Returns the number of transits started.

        Raises SchedulingError, ConfigurationError.
        """
        if event.ts < self.clock.now:
            raise SchedulingError(
                f"Event {event.name} from {event.source} is in the past",
                context={"ts": f"{event.ts:.6f}", "now": f"{self.clock.now:.6f}"},
            )
        source = self.topology.component(event.source)
        if source.kind not in EVENT_SOURCE_KINDS:
            raise ConfigurationError(
                f"{source.id} ({source.kind}) cannot emit events", context={"source": source.id}
            )
        subscribers = subscribed_rules(event, self.rules)
        if not subscribers:
            logger.debug(f"[{self.group.name}] no app subscribes to {event!r}")
        for rule in subscribers:
            self.env.process(self._transit(event, rule, next(self._transit_ids)))
        return len(subscribers)

    def run(self, events: list[EventSpec]) -> None:
        """Raises SimulationError, ConfigurationError."""
        for event in events:
            self.inject_event(event)
        self.env.run()
        self.ledger.assert_drained()
        for message in self.messages:
            if not message.complete:
                raise DeliveryError(
                    f"Message {message.msg_id} never reached {message.actuator}",
                    context={"msg_id": str(message.msg_id)},
                )
            expected = message.shared_hops + len(self._routes[message.msg_id])
            if len(message.hops) != expected:
                raise DeliveryError(
                    f"Message {message.msg_id} logged {len(message.hops)} hops, "
                    f"its path has {expected}",
                    context={"msg_id": str(message.msg_id)},
                )

    # Cloud logic

    def dispatch_at_cloud(
        self, cloud: ComponentSpec, arrival: EventArrival
    ) -> list[MessageRecord]:
        """Evaluate the arriving event against the rule hosted here.

        One message per action of every matching handler, issued in declared
        order. An event no handler accepts is recorded as terminated.

        Raises SimulationError.
        """
        if cloud.kind not in DISPATCH_KINDS:
            raise SimulationError(
                f"{cloud.id} ({cloud.kind}) cannot evaluate app rules",
                context={"cloud": cloud.id, "rule": arrival.rule.id},
            )
        local_time = arrival.hops[-1].time if arrival.hops else arrival.event.ts
        logger.debug(
            f"[{self.group.name}] {cloud.id} logged {arrival.event!r} at {local_time:.6f}"
        )

        handlers = arrival.rule.matching_handlers(arrival.event)
        if not handlers:
            self.terminated.append(
                TerminatedEvent(
                    transit_id=arrival.transit_id,
                    group=self.group.name,
                    rule_id=arrival.rule.id,
                    event=arrival.event,
                    hops=arrival.hops,
                )
            )
            logger.debug(f"[{self.group.name}] {arrival.rule.id} ignores {arrival.event!r}")
            return []

        messages: list[MessageRecord] = []
        actions = [action for handler in handlers for action in handler.actions]
        for index, action in enumerate(actions):
            message = MessageRecord(
                msg_id=next(self._msg_ids),
                group=self.group.name,
                rule_id=arrival.rule.id,
                transit_id=arrival.transit_id,
                event=arrival.event,
                actuator=action.actuator,
                command=action.command,
                issue_offset=quantize(index * self.action_stagger),
                shared_hops=len(arrival.hops),
                hops=list(arrival.hops),
            )
            self._routes[message.msg_id] = action.path[len(arrival.hops) :]
            self._hosts[message.msg_id] = cloud.id
            messages.append(message)
        self.messages.extend(messages)
        return messages

    # Processes

    def _transit(self, event: EventSpec, rule: AppRule, transit_id: int) -> Process:
        yield self.env.timeout(event.ts - self.env.now)
        handler = next(h for h in rule.handlers if h.trigger.subscribes(event))
        ingress = self.topology.ingress_of(rule, handler)
        hops: list[Hop] = []
        previous = event.source
        for component in ingress:
            yield from self._hop(f"transit-{transit_id}", previous, component, hops)
            previous = component
        arrival = EventArrival(event=event, rule=rule, transit_id=transit_id, hops=hops)
        host = self.topology.component(ingress[-1])
        for message in self.dispatch_at_cloud(host, arrival):
            self.env.process(self._deliver(message))

    def _deliver(self, message: MessageRecord) -> Process:
        if message.issue_offset > 0:
            yield self.env.timeout(message.issue_offset)
        previous = self._hosts[message.msg_id]
        for component in self._routes[message.msg_id]:
            yield from self._hop(f"msg-{message.msg_id}", previous, component, message.hops)
            previous = component
        message.ta = message.hops[-1].time
        logger.debug(f"[{self.group.name}] {message!r}")

    def _hop(self, carrier: str, origin: str, target: str, hops: list[Hop]) -> Process:
        link = self._link(origin, target)
        delay = max(quantize(sample_hop_delay(link, self.rng)), TIME_RESOLUTION)
        pending = self.ledger.schedule(carrier, target, self.env.now + delay)
        yield self.env.timeout(delay)
        self.ledger.deliver(pending)
        hops.append(Hop(component=target, time=quantize(self.env.now)))

    def _link(self, origin: str, target: str) -> LinkDelayModel:
        key = (origin, target)
        if key not in self._links:
            self._links[key] = self.topology.link_between(origin, target)
        return self._links[key]


class Simulator:
    """Runs every group of a scenario and assembles the trace."""

    def __init__(self, scenario: ScenarioConfig, topology: Topology | None = None) -> None:
        self.scenario = scenario
        self.topology = topology or resolve_topology(scenario)
        self.rules = resolve_rules(scenario)

    def validate(self) -> None:
        """Check every rule path, relation and event source before any event runs.

        Raises ConfigurationError.
        """
        for group in self.scenario.groups:
            for rule in group_rules(group, self.rules):
                self.topology.validate_rule(rule)
            for relation in group.relations:
                self.topology.validate_relation(relation)
            for stream in group.streams:
                for stimulus in stream:
                    self._check_source(stimulus.source)
            for event in group.events:
                self._check_source(event.source)

    def _check_source(self, source: str) -> None:
        if self.topology.kind_of(source) not in EVENT_SOURCE_KINDS:
            raise ConfigurationError(f"{source} cannot emit events", context={"source": source})

    def run(self) -> Trace:
        """Raises SimulationError, ConfigurationError."""
        self.validate()
        scenario = self.scenario
        logger.info(
            f"Running scenario {scenario.name} (seed={scenario.seed}, "
            f"period={scenario.period}, groups={len(scenario.groups)})"
        )
        msg_ids = itertools.count()
        transit_ids = itertools.count()
        generators = group_generators(scenario.seed, len(scenario.groups))

        messages: list[MessageRecord] = []
        terminated: list[TerminatedEvent] = []
        for group, rng in zip(scenario.groups, generators, strict=True):
            run = GroupRun(
                group,
                group_rules(group, self.rules),
                self.topology,
                rng,
                msg_ids,
                transit_ids,
                scenario.action_stagger,
            )
            run.run(group.expand(scenario.n_events, scenario.period))
            messages.extend(sorted(run.messages, key=lambda m: m.msg_id))
            terminated.extend(sorted(run.terminated, key=lambda t: t.transit_id))
            logger.debug(
                f"Group {group.name}: {len(run.messages)} messages, "
                f"{len(run.terminated)} terminated, {run.ledger.delivered} hops"
            )

        logger.info(
            f"Scenario {scenario.name} finished: {len(messages)} messages, "
            f"{len(terminated)} terminated events"
        )
        return Trace(
            messages=messages,
            terminated=terminated,
            topology=self.topology,
            scenario=scenario,
            seed=scenario.seed,
        )


def run(scenario: ScenarioConfig, topology: Topology | None = None) -> Trace:
    """Simulate a scenario to exhaustion and return its trace.

    Raises SimulationError, ConfigurationError.
    """
    return Simulator(scenario, topology).run()
