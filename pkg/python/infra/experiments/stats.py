"""Aggregation of per-cell rates into min/max/mean/median tables with polars."""

from collections.abc import Iterable, Sequence

import polars as pl

from python.domain.detect.models import EntityClass

from .models import POOLED, CellResult, RawRate, StatRow

STAT_COLUMNS = ("min", "max", "mean", "median")
PRECISION = 6


def raw_rates(results: Iterable[CellResult]) -> list[RawRate]:
    """Flatten cell results, sorted by (period, seed) so order never depends on completion."""
    ordered = sorted(results, key=lambda r: (r.cell.period, r.cell.seed))
    return [rate for result in ordered for rate in result.rates]


def _frame(raw: Sequence[RawRate], classes: Sequence[EntityClass]) -> pl.DataFrame:
    frame = pl.DataFrame([rate.model_dump() for rate in raw])
    return frame.filter(
        pl.col("entity").is_in(list(classes))
        # the user cloud is compared on event arrivals, not returning commands
        & (
            (pl.col("entity") != "user-cloud")
            | ((pl.col("visit") == 0) & (pl.col("carrier") != "command"))
        )
    )


def aggregate(raw: Sequence[RawRate], classes: Sequence[EntityClass]) -> list[StatRow]:
    """Statistics per (period, entity, app) plus rows pooled over every app."""
    if not raw:
        return []
    frame = _frame(raw, classes)
    if frame.is_empty():
        return []
    aggs = [
        pl.col("percentage").min().alias("min"),
        pl.col("percentage").max().alias("max"),
        pl.col("percentage").mean().alias("mean"),
        pl.col("percentage").median().alias("median"),
    ]
    per_app = frame.group_by(["period", "entity", "app"]).agg(aggs)
    pooled = (
        frame.group_by(["period", "entity"])
        .agg(aggs)
        .with_columns(pl.lit(POOLED).alias("app"))
        .select(per_app.columns)
    )
    table = (
        pl.concat([per_app, pooled])
        .with_columns(pl.col(list(STAT_COLUMNS)).round(PRECISION))
        .sort(["period", "entity", "app"])
    )
    return [StatRow.model_validate(row) for row in table.iter_rows(named=True)]


def pooled_mean(raw: Sequence[RawRate], entity: EntityClass) -> float:
    """Mean percentage of every sample of one entity class.

    Raises ValueError if there are no samples.
    """
    frame = _frame(raw, [entity]) if raw else pl.DataFrame()
    if frame.is_empty():
        raise ValueError(f"no samples for {entity}")
    return round(float(frame["percentage"].mean()), PRECISION)  # type: ignore[arg-type]
