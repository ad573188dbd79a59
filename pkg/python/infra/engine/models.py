"""Engine plumbing: virtual clock, pending deliveries and cloud arrivals."""

import itertools

import simpy
from pydantic import BaseModel, ConfigDict, Field

from python.domain.home.models import AppRule, EventSpec, Hop

from .exceptions import DeliveryError, SchedulingError


class SimClock:
    """Read-only view of a simpy environment's clock that checks monotonicity."""

    def __init__(self, env: simpy.Environment) -> None:
        self._env = env
        self._last_processed = 0.0

    @property
    def now(self) -> float:
        return float(self._env.now)

    def observe(self, due: float) -> None:
        """Record a processed delivery; due times must never decrease.

        Raises DeliveryError.
        """
        if due < self._last_processed:
            raise DeliveryError(
                "Clock moved backwards",
                context={"due": f"{due:.6f}", "last": f"{self._last_processed:.6f}"},
            )
        self._last_processed = due


class PendingDelivery(BaseModel):
    """A message (or event transit) on its way to the next component."""

    model_config = ConfigDict(frozen=True)

    carrier: str  # "msg-<id>" or "transit-<id>"
    next_component: str
    due: float = Field(ge=0)
    tie_break: int = Field(ge=0)


class EventArrival(BaseModel):
    """An event reaching the cloud that hosts a subscribed rule."""

    event: EventSpec
    rule: AppRule
    transit_id: int
    hops: list[Hop]


class DeliveryLedger:
    """Tracks every scheduled hop so each is delivered exactly once, in clock order."""

    def __init__(self, clock: SimClock) -> None:
        self.clock = clock
        self._sequence = itertools.count()
        self._outstanding: dict[int, PendingDelivery] = {}
        self.delivered = 0

    def schedule(self, carrier: str, next_component: str, due: float) -> PendingDelivery:
        """Raises SchedulingError."""
        if due < self.clock.now:
            raise SchedulingError(
                f"Delivery of {carrier} scheduled in the past",
                context={"due": f"{due:.6f}", "now": f"{self.clock.now:.6f}"},
            )
        pending = PendingDelivery(
            carrier=carrier, next_component=next_component, due=due, tie_break=next(self._sequence)
        )
        self._outstanding[pending.tie_break] = pending
        return pending

    def deliver(self, pending: PendingDelivery) -> None:
        """Raises DeliveryError."""
        if self._outstanding.pop(pending.tie_break, None) is None:
            raise DeliveryError(
                f"Duplicate delivery of {pending.carrier} to {pending.next_component}",
                context={"tie_break": str(pending.tie_break)},
            )
        self.clock.observe(pending.due)
        self.delivered += 1

    @property
    def outstanding(self) -> list[PendingDelivery]:
        return sorted(self._outstanding.values(), key=lambda p: (p.due, p.tie_break))

    def assert_drained(self) -> None:
        """Raises DeliveryError if any scheduled hop was never delivered."""
        if self._outstanding:
            first = self.outstanding[0]
            raise DeliveryError(
                f"{len(self._outstanding)} deliveries never completed",
                context={"first": f"{first.carrier}->{first.next_component}"},
            )
