"""Smart-home model: components, link delays, app rules and messages."""

from .exceptions import ConfigurationError, HomeError
from .models import (
    Action,
    AppRule,
    ComponentKind,
    ComponentSpec,
    EndpointClass,
    EventSpec,
    Handler,
    Hop,
    LinkDelayModel,
    MessageRecord,
    Seconds,
    TemporalRelation,
    TerminatedEvent,
    Trigger,
    ValuePredicate,
    endpoint_class,
    quantize,
)
from .topology import DEFAULT_LINKS, LINK_ALIASES, Topology, default_topology

__all__ = [
    "DEFAULT_LINKS",
    "LINK_ALIASES",
    "Action",
    "AppRule",
    "ComponentKind",
    "ComponentSpec",
    "ConfigurationError",
    "EndpointClass",
    "EventSpec",
    "Handler",
    "HomeError",
    "Hop",
    "LinkDelayModel",
    "MessageRecord",
    "Seconds",
    "TemporalRelation",
    "TerminatedEvent",
    "Topology",
    "Trigger",
    "ValuePredicate",
    "default_topology",
    "endpoint_class",
    "quantize",
]
