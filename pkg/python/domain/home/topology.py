"""Device inventory, link delay table and route resolution for the default house."""

import logging
from collections.abc import Iterable, Sequence

from pydantic import BaseModel, ConfigDict, model_validator

from .exceptions import ConfigurationError
from .models import (
    EVENT_SOURCE_KINDS,
    AppRule,
    ComponentKind,
    ComponentSpec,
    EndpointClass,
    Handler,
    LinkDelayModel,
    TemporalRelation,
)

logger = logging.getLogger(__name__)


def _link(a: EndpointClass, b: EndpointClass, mean: float, std: float) -> LinkDelayModel:
    return LinkDelayModel(endpoint_kinds=(a, b), mean=mean, std=std)


# Processing time plus network latency per endpoint pair, in seconds.
DEFAULT_LINKS: tuple[LinkDelayModel, ...] = (
    _link("iot-device", "edge", 0.056, 0.007),
    _link("iot-device", "vendor-cloud", 1.4, 0.3),
    _link("edge", "user-iot-cloud", 1.5, 0.4),
    _link("edge", "vendor-cloud", 1.5, 0.4),
    _link("mobile-app", "user-iot-cloud", 1.5, 0.4),
    _link("mobile-app", "trigger-action-cloud", 2.5, 0.5),
    _link("user-iot-cloud", "trigger-action-cloud", 2.5, 0.5),
    _link("user-iot-cloud", "vendor-cloud", 1.5, 0.4),
)

# Endpoint pairs with no row of their own borrow another row.
LINK_ALIASES: dict[tuple[str, str], tuple[str, str]] = {
    ("trigger-action-cloud", "vendor-cloud"): ("user-iot-cloud", "vendor-cloud"),
}

_INVENTORY: tuple[tuple[str, ComponentKind, str | None], ...] = (
    # sensors
    ("temperature-sensor", "sensor", None),
    ("motion-sensor", "sensor", None),
    ("doorbell", "sensor", "ring"),
    ("smoke-sensor", "sensor", None),
    ("presence-sensor-1", "sensor", None),
    ("presence-sensor-2", "sensor", None),
    ("lock-button", "sensor", None),
    ("hue-button", "sensor", "hue"),
    ("door-contact", "sensor", None),
    ("window-contact", "sensor", None),
    ("power-meter", "sensor", None),
    ("shade-switch", "sensor", None),
    ("sprinkler-button", "sensor", None),
    # apps and assistants
    ("mobile-app", "mobile-app", None),
    ("ifttt-app", "mobile-app", "ifttt"),
    ("google-assistant", "voice-assistant", "google"),
    # actuators
    ("smart-oven", "actuator", None),
    ("smart-plug", "actuator", None),
    ("garage-door", "actuator", None),
    ("garage-lock", "actuator", None),
    ("window", "actuator", None),
    ("smart-camera", "actuator", None),
    ("smart-fan", "actuator", None),
    ("hue-light", "actuator", "hue"),
    ("smart-alarm", "actuator", None),
    ("smart-lock", "actuator", None),
    ("smart-thermostat", "actuator", None),
    ("window-shade", "actuator", None),
    ("sprinkler-valve", "actuator", None),
    ("irrigation-system", "actuator", None),
    # hub and clouds
    ("edge-hub", "edge", None),
    ("iot-cloud", "user-iot-cloud", None),
    ("ifttt-cloud", "trigger-action-cloud", "ifttt"),
    ("hue-cloud", "vendor-cloud", "hue"),
    ("google-cloud", "vendor-cloud", "google"),
    ("partner-iot-cloud", "vendor-cloud", "partner"),
)


def default_topology() -> tuple[list[ComponentSpec], list[LinkDelayModel]]:
    """Return the house inventory used by the app catalog and the eight link rows."""
    components = [
        ComponentSpec(id=cid, kind=kind, vendor=vendor) for cid, kind, vendor in _INVENTORY
    ]
    return components, list(DEFAULT_LINKS)


class Topology(BaseModel):
    """Components and link delay rows of one deployment."""

    model_config = ConfigDict(frozen=True)

    components: tuple[ComponentSpec, ...]
    links: tuple[LinkDelayModel, ...]

    @model_validator(mode="after")
    def _check_unique(self) -> "Topology":
        ids = [c.id for c in self.components]
        duplicates = sorted({cid for cid in ids if ids.count(cid) > 1})
        if duplicates:
            raise ValueError(f"duplicate component ids: {', '.join(duplicates)}")
        pairs = [link.endpoint_kinds for link in self.links]
        if len(pairs) != len(set(pairs)):
            raise ValueError("link rows must be unique per endpoint pair")
        return self

    @classmethod
    def default(cls) -> "Topology":
        components, links = default_topology()
        return cls(components=tuple(components), links=tuple(links))

    @property
    def ids(self) -> set[str]:
        return {c.id for c in self.components}

    def component(self, component_id: str) -> ComponentSpec:
        """Look up a component by id.

        Raises ConfigurationError.
        """
        for component in self.components:
            if component.id == component_id:
                return component
        raise ConfigurationError(
            f"Unknown component: {component_id}", context={"component": component_id}
        )

    def kind_of(self, component_id: str) -> ComponentKind:
        return self.component(component_id).kind

    def link_between(self, a: str, b: str) -> LinkDelayModel:
        """Resolve the delay row for a hop between two components.

        Raises ConfigurationError.
        """
        ends = sorted((self.component(a).endpoint, self.component(b).endpoint))
        pair = (ends[0], ends[1])
        for link in self.links:
            if link.endpoint_kinds == pair:
                return link
        alias = LINK_ALIASES.get(pair)
        if alias is not None:
            for link in self.links:
                if link.endpoint_kinds == alias:
                    logger.debug(f"Link {a} -> {b} resolved through {alias[0]} <-> {alias[1]}")
                    return link
        raise ConfigurationError(
            f"No link declared between {a} and {b}",
            context={"from": a, "to": b, "endpoints": f"{pair[0]}<->{pair[1]}"},
        )

    def validate_route(self, source: str, path: Sequence[str]) -> list[LinkDelayModel]:
        """Resolve every hop of a path starting at source.

        Raises ConfigurationError.
        """
        if not path:
            raise ConfigurationError("Empty path", context={"source": source})
        hops = [source, *path]
        return [self.link_between(a, b) for a, b in zip(hops, hops[1:], strict=False)]

    def validate_rule(self, rule: AppRule) -> None:
        """Check a rule's sources, actuators and paths against this topology.

        Raises ConfigurationError.
        """
        for handler in rule.handlers:
            source = handler.trigger.source
            if self.kind_of(source) not in EVENT_SOURCE_KINDS:
                raise ConfigurationError(
                    f"Rule {rule.id} is triggered by {source}, which cannot emit events",
                    context={"rule": rule.id, "source": source},
                )
            for action in handler.actions:
                if self.kind_of(action.actuator) not in ("actuator", "vendor-cloud"):
                    raise ConfigurationError(
                        f"Rule {rule.id} commands {action.actuator}, which is not actuable",
                        context={"rule": rule.id, "actuator": action.actuator},
                    )
                self.validate_route(source, action.path)
            self.ingress_of(rule, handler)

    def host_of(self, rule: AppRule) -> str:
        """The cloud evaluating a rule: the first trigger-action cloud on its path,
        otherwise the first user IoT cloud.

        Raises ConfigurationError.
        """
        if rule.host is not None:
            return rule.host
        path = rule.paths[0]
        for wanted in ("trigger-action-cloud", "user-iot-cloud"):
            for component_id in path:
                if self.kind_of(component_id) == wanted:
                    return component_id
        raise ConfigurationError(
            f"Rule {rule.id} has no cloud to evaluate it", context={"rule": rule.id}
        )

    def ingress_of(self, rule: AppRule, handler: Handler | None = None) -> tuple[str, ...]:
        """Path prefix up to and including the host, shared by all of a handler's actions.

        Raises ConfigurationError.
        """
        handler = handler or rule.handlers[0]
        host = self.host_of(rule)
        prefixes: set[tuple[str, ...]] = set()
        for action in handler.actions:
            if host not in action.path:
                raise ConfigurationError(
                    f"Path of {rule.id} to {action.actuator} bypasses host {host}",
                    context={"rule": rule.id, "host": host},
                )
            prefixes.add(action.path[: action.path.index(host) + 1])
        if len(prefixes) != 1:
            raise ConfigurationError(
                f"Actions of {rule.id} disagree on the route to {host}",
                context={"rule": rule.id, "host": host},
            )
        return prefixes.pop()

    def validate_relation(self, relation: TemporalRelation) -> None:
        """Raises ConfigurationError if a relation names an unknown actuator."""
        for actuator in relation.actuators:
            if actuator not in self.ids:
                raise ConfigurationError(
                    f"Temporal relation references unknown actuator: {actuator}",
                    context={"actuator": actuator},
                )

    def with_link_overrides(self, links: Iterable[LinkDelayModel]) -> "Topology":
        """Return a copy where rows with the same endpoint pair are replaced or added."""
        rows = {link.endpoint_kinds: link for link in self.links}
        for link in links:
            rows[link.endpoint_kinds] = link
        return Topology(components=self.components, links=tuple(rows.values()))

    def with_components(self, components: Iterable[ComponentSpec]) -> "Topology":
        """Return a copy with extra components; an existing id is replaced."""
        merged = {c.id: c for c in self.components}
        for component in components:
            merged[component.id] = component
        return Topology(components=tuple(merged.values()), links=self.links)

    def path_variance(self, source: str, path: Sequence[str]) -> float:
        """Sum of per-hop delay variances along a path (s²)."""
        return sum(link.variance for link in self.validate_route(source, path))

    def path_mean(self, source: str, path: Sequence[str]) -> float:
        return sum(link.mean for link in self.validate_route(source, path))
