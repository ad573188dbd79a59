"""Report emission: experiment statistics and trace analyses as CSV or JSON."""

import logging
from pathlib import Path
from typing import Literal

import polars as pl
from pydantic_core import to_json

from python.domain.detect.models import EntityRate, MisorderReport
from python.domain.detect.report import alternate_mode
from python.infra.experiments.models import ExperimentStats

from .exceptions import PersistenceError

logger = logging.getLogger(__name__)

ReportFormat = Literal["csv", "json"]

STATS_COLUMNS = ("period", "entity", "app", "min", "max", "mean", "median")
RATE_COLUMNS = (
    "mode",
    "group",
    "entity",
    "visit",
    "entity_class",
    "subject",
    "carrier",
    "total",
    "misordered",
    "percentage",
)


def stats_frame(stats: ExperimentStats) -> pl.DataFrame:
    rows = [row.model_dump() for row in stats.rows]
    schema = {
        "period": pl.Float64,
        "entity": pl.String,
        "app": pl.String,
        "min": pl.Float64,
        "max": pl.Float64,
        "mean": pl.Float64,
        "median": pl.Float64,
    }
    return pl.DataFrame(rows, schema=schema).select(STATS_COLUMNS)


def _rate_rows(mode: str, rates: list[EntityRate]) -> list[dict[str, object]]:
    return [{"mode": mode, **rate.model_dump()} for rate in rates]


def report_frame(report: MisorderReport) -> pl.DataFrame:
    """Primary rates followed by the alternate-mode rates."""
    rows = _rate_rows(report.mode, report.rates)
    rows += _rate_rows(alternate_mode(report.mode), report.sensitivity)
    schema = {
        "mode": pl.String,
        "group": pl.String,
        "entity": pl.String,
        "visit": pl.Int64,
        "entity_class": pl.String,
        "subject": pl.String,
        "carrier": pl.String,
        "total": pl.Int64,
        "misordered": pl.Int64,
        "percentage": pl.Float64,
    }
    return pl.DataFrame(rows, schema=schema).select(RATE_COLUMNS)


def _infer_format(path: Path) -> ReportFormat:
    suffix = path.suffix.lower().lstrip(".")
    if suffix == "csv":
        return "csv"
    if suffix == "json":
        return "json"
    raise PersistenceError("Cannot infer report format", context={"path": str(path)})


def write_report(
    report: ExperimentStats | MisorderReport, path: Path, fmt: ReportFormat | None = None
) -> Path:
    """Write statistics or an analysis report; the format defaults to the file suffix.

    Raises PersistenceError.
    """
    fmt = fmt or _infer_format(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    try:
        if fmt == "json":
            path.write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")
        elif isinstance(report, ExperimentStats):
            stats_frame(report).write_csv(path)
        else:
            report_frame(report).write_csv(path)
    except OSError as e:
        raise PersistenceError(f"Cannot write report: {e}", context={"path": str(path)}) from e
    logger.info(f"Wrote {fmt} report {path}")
    return path


def write_series(stats: ExperimentStats, path: Path) -> Path:
    """Plot data: entity -> period -> min/max/mean/median of the pooled rows.

    Raises PersistenceError.
    """
    path.parent.mkdir(parents=True, exist_ok=True)
    try:
        path.write_bytes(to_json(stats.series(), indent=2) + b"\n")
    except OSError as e:
        raise PersistenceError(f"Cannot write series: {e}", context={"path": str(path)}) from e
    logger.info(f"Wrote series {path}")
    return path
