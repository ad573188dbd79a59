"""Discrete-event engine for event and command propagation."""

from .delays import MAX_REDRAWS, MIN_DELAY, group_generators, sample_hop_delay
from .exceptions import DeliveryError, SchedulingError, SimulationError
from .models import DeliveryLedger, EventArrival, PendingDelivery, SimClock
from .simulator import GroupRun, Simulator, run

__all__ = [
    "MAX_REDRAWS",
    "MIN_DELAY",
    "DeliveryError",
    "DeliveryLedger",
    "EventArrival",
    "GroupRun",
    "PendingDelivery",
    "SchedulingError",
    "SimClock",
    "SimulationError",
    "Simulator",
    "group_generators",
    "run",
    "sample_hop_delay",
]
