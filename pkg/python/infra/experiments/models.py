"""Pydantic models for experiment cells, raw rates and aggregated statistics."""

from typing import Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from python.domain.detect.models import Carrier, EntityClass, RateMode


class ExperimentCell(BaseModel):
    """One (experiment, period, seed) simulation."""

    model_config = ConfigDict(frozen=True)

    experiment: int
    period: float = Field(gt=0)
    seed: int = Field(ge=0)
    n_events: int = Field(ge=1)
    mode: RateMode = "adjacent"


class RawRate(BaseModel):
    """Misordered percentage of one entity stream in one cell."""

    model_config = ConfigDict(frozen=True)

    period: float
    seed: int
    app: str  # scenario group
    entity: EntityClass
    component: str
    visit: int
    subject: str = "*"
    carrier: Carrier = "mixed"
    total: int
    misordered: int
    percentage: float


class CellResult(BaseModel):
    cell: ExperimentCell
    rates: list[RawRate]


class StatRow(BaseModel):
    """min/max/mean/median of misordered percentages for one (period, entity, app)."""

    model_config = ConfigDict(frozen=True)

    period: float
    entity: EntityClass
    app: str  # "all" for rows pooled over every app of the experiment
    min: float
    max: float
    mean: float
    median: float

    @model_validator(mode="after")
    def _ordered(self) -> Self:
        if not (self.min <= self.median <= self.max and self.min <= self.mean <= self.max):
            raise ValueError(f"inconsistent statistics for {self.entity}/{self.app}")
        return self


POOLED = "all"


class ExperimentStats(BaseModel):
    experiment: int
    mode: RateMode
    seeds: list[int]
    periods: list[float]
    n_events: int
    rows: list[StatRow]
    raw: list[RawRate] = Field(default_factory=list)

    def row(self, period: float, entity: EntityClass, app: str = POOLED) -> StatRow:
        """Raises KeyError."""
        for row in self.rows:
            if row.period == period and row.entity == entity and row.app == app:
                return row
        raise KeyError((period, entity, app))

    def mean(self, period: float, entity: EntityClass, app: str = POOLED) -> float:
        return self.row(period, entity, app).mean

    def series(self) -> dict[str, dict[str, dict[str, float]]]:
        """Plot-ready pooled statistics: entity -> period -> min/max/mean/median."""
        series: dict[str, dict[str, dict[str, float]]] = {}
        for row in self.rows:
            if row.app != POOLED:
                continue
            series.setdefault(row.entity, {})[f"{row.period:g}"] = {
                "min": row.min,
                "max": row.max,
                "mean": row.mean,
                "median": row.median,
            }
        return series
