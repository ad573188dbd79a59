"""Tests for rate aggregation."""

import pytest

from ..models import POOLED, CellResult, ExperimentCell, ExperimentStats
from ..stats import aggregate, pooled_mean, raw_rates
from .helpers import make_raw_rate


def test_aggregate_per_app_and_pooled() -> None:
    """Test min/max/mean/median per app and over every app."""
    raw = [
        make_raw_rate(10.0, app="A", seed=0),
        make_raw_rate(30.0, app="A", seed=1),
        make_raw_rate(50.0, app="B", seed=0),
    ]
    rows = {(row.app, row.entity): row for row in aggregate(raw, ["actuator"])}

    assert set(rows) == {("A", "actuator"), ("B", "actuator"), (POOLED, "actuator")}
    a = rows[("A", "actuator")]
    assert (a.min, a.max, a.mean, a.median) == (10.0, 30.0, 20.0, 20.0)
    pooled = rows[(POOLED, "actuator")]
    assert (pooled.min, pooled.max, pooled.mean, pooled.median) == (10.0, 50.0, 30.0, 30.0)


def test_aggregate_filters_classes_and_visits() -> None:
    """Test unreported classes and user-cloud command streams are ignored."""
    raw = [
        make_raw_rate(20.0, entity="user-cloud"),
        make_raw_rate(90.0, entity="user-cloud", visit=1),
        make_raw_rate(80.0, entity="user-cloud", carrier="command"),
        make_raw_rate(70.0, entity="edge"),
    ]
    rows = aggregate(raw, ["user-cloud", "actuator"])
    assert {(row.entity, row.app) for row in rows} == {("user-cloud", "A"), ("user-cloud", POOLED)}
    assert all(row.max == 20.0 for row in rows)


def test_aggregate_rounds_and_sorts() -> None:
    """Test statistics are rounded to six places and sorted by period, entity, app."""
    raw = [
        make_raw_rate(100 / 3, period=0.5),
        make_raw_rate(0.0, period=0.25, app="B"),
        make_raw_rate(0.0, period=0.25, app="A"),
    ]
    rows = aggregate(raw, ["actuator"])
    assert [(row.period, row.app) for row in rows] == [
        (0.25, "A"),
        (0.25, "B"),
        (0.25, POOLED),
        (0.5, "A"),
        (0.5, POOLED),
    ]
    assert rows[-1].mean == 33.333333


def test_aggregate_empty() -> None:
    """Test no rates give no rows."""
    assert aggregate([], ["actuator"]) == []
    assert aggregate([make_raw_rate(5.0, entity="edge")], ["actuator"]) == []


def test_raw_rates_sorted_by_cell() -> None:
    """Test flattening ignores completion order."""
    late = ExperimentCell(experiment=1, period=0.5, seed=0, n_events=10)
    early = ExperimentCell(experiment=1, period=0.25, seed=1, n_events=10)
    results = [
        CellResult(cell=late, rates=[make_raw_rate(1.0, period=0.5)]),
        CellResult(cell=early, rates=[make_raw_rate(2.0, seed=1)]),
    ]
    assert [rate.percentage for rate in raw_rates(results)] == [2.0, 1.0]


def test_pooled_mean() -> None:
    """Test the pooled mean over every sample of one class."""
    raw = [make_raw_rate(10.0), make_raw_rate(40.0, app="B"), make_raw_rate(99.0, entity="edge")]
    assert pooled_mean(raw, "actuator") == 25.0
    with pytest.raises(ValueError):
        pooled_mean(raw, "vendor-cloud")
    with pytest.raises(ValueError):
        pooled_mean([], "actuator")


def test_stats_lookup_and_series() -> None:
    """Test row lookup and the plot series keep only pooled rows."""
    raw = [make_raw_rate(10.0), make_raw_rate(30.0, app="B")]
    stats = ExperimentStats(
        experiment=1,
        mode="adjacent",
        seeds=[0],
        periods=[0.25],
        n_events=10,
        rows=aggregate(raw, ["actuator"]),
    )
    assert stats.mean(0.25, "actuator") == 20.0
    assert stats.mean(0.25, "actuator", "B") == 30.0
    with pytest.raises(KeyError):
        stats.row(2.0, "actuator")
    assert stats.series() == {
        "actuator": {"0.25": {"min": 10.0, "max": 30.0, "mean": 20.0, "median": 20.0}}
    }
