"""Violations, per-entity rates and the combined misorder report."""

from typing import Literal, Self

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

ViolationKind = Literal["P1", "P2", "P3"]
RateMode = Literal["adjacent", "any", "state"]
Carrier = Literal["event", "command", "mixed"]
EntityClass = Literal["edge", "user-cloud", "trigger-action-cloud", "vendor-cloud", "actuator"]

ENTITY_CLASSES: tuple[EntityClass, ...] = (
    "edge",
    "user-cloud",
    "trigger-action-cloud",
    "vendor-cloud",
    "actuator",
)


class Violation(BaseModel):
    """A message pair (i, j) created in order j, i but received in order i, j."""

    model_config = ConfigDict(frozen=True)

    kind: ViolationKind
    pair: tuple[int, int]
    entity: str
    group: str = "default"

    @model_validator(mode="after")
    def _distinct(self) -> Self:
        if self.pair[0] == self.pair[1]:
            raise ValueError(f"violation pair must name two messages, got {self.pair}")
        return self


class EntityRate(BaseModel):
    """Misordered arrivals at one (entity, visit) stream of one group."""

    model_config = ConfigDict(frozen=True)

    group: str
    entity: str
    # 0 for the first time a message reaches the entity, 1 for the second, ...
    visit: int = Field(default=0, ge=0)
    entity_class: EntityClass
    # Event source or actuator a "state" stream follows; "*" when the whole group is pooled.
    subject: str = "*"
    carrier: Carrier = "mixed"
    total: int = Field(ge=1)
    misordered: int = Field(ge=0)

    @model_validator(mode="after")
    def _bounded(self) -> Self:
        if self.misordered > self.total:
            raise ValueError("misordered arrivals exceed total arrivals")
        return self

    @computed_field  # type: ignore[prop-decorator]
    @property
    def percentage(self) -> float:
        return 100.0 * self.misordered / self.total


class MisorderReport(BaseModel):
    """Rates under the primary counting mode, the alternate mode, and violations."""

    mode: RateMode
    rates: list[EntityRate]
    sensitivity: list[EntityRate] = Field(default_factory=list)
    violations: dict[ViolationKind, list[Violation]] = Field(default_factory=dict)

    def rate(self, entity: str, group: str | None = None, visit: int = 0) -> float:
        """Pooled percentage at an entity, optionally restricted to one group.

        An actuator bound by a temporal relation reports its joint stream.

        Raises KeyError.
        """
        rows = [
            r
            for r in self.rates
            if entity in r.entity.split("+")
            and r.visit == visit
            and (group is None or r.group == group)
        ]
        if not rows:
            raise KeyError(entity)
        return 100.0 * sum(r.misordered for r in rows) / sum(r.total for r in rows)

    @property
    def violation_count(self) -> int:
        return sum(len(found) for found in self.violations.values())
