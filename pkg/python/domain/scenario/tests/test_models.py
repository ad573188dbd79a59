"""Tests for scenario configuration and traces."""

import pytest
from pydantic import ValidationError

from python.domain.home.models import EventSpec, TemporalRelation
from python.domain.home.topology import Topology

from ..models import ScenarioConfig, ScenarioGroup, Trace
from .helpers import make_group, make_scenario, make_stimulus


def test_single_stream_alternates() -> None:
    """Test one stream cycles through its templates one period apart."""
    events = make_group().expand(n_events=4, period=0.25)
    assert [e.name for e in events] == [
        "oven-on-click",
        "oven-off-click",
        "oven-on-click",
        "oven-off-click",
    ]
    assert [e.ts for e in events] == [0.0, 0.25, 0.5, 0.75]


def test_streams_interleave_round_robin() -> None:
    """Test two streams take turns, each advancing its template by round and index."""
    a = [make_stimulus(name="a0"), make_stimulus(name="a1")]
    b = [make_stimulus(name="b0"), make_stimulus(name="b1")]
    group = make_group(streams=[a, b])
    events = group.expand(n_events=2, period=0.5)
    assert [e.name for e in events] == ["a0", "b1", "a1", "b0"]
    assert [e.ts for e in events] == [0.0, 0.5, 1.0, 1.5]


def test_group_event_count_overrides_scenario() -> None:
    """Test a group's own n_events wins."""
    group = make_group().model_copy(update={"n_events": 3})
    assert len(group.expand(n_events=50, period=1.0)) == 3


def test_explicit_events_are_sorted() -> None:
    """Test explicit events replace generated stimuli."""
    group = ScenarioGroup(
        name="manual",
        app_ids=["M1"],
        events=[
            EventSpec(source="mobile-app", name="oven-off-click", ts=2.0),
            EventSpec(source="mobile-app", name="oven-on-click", ts=1.0),
        ],
    )
    assert [e.ts for e in group.expand(n_events=50, period=0.25)] == [1.0, 2.0]


def test_group_needs_stimuli() -> None:
    """Test a group without streams or events is rejected."""
    with pytest.raises(ValidationError):
        ScenarioGroup(name="empty", app_ids=["M1"])
    with pytest.raises(ValidationError):
        ScenarioGroup(name="hollow", app_ids=["M1"], streams=[[]])


def test_group_names_are_unique() -> None:
    """Test duplicate group names are rejected."""
    with pytest.raises(ValidationError):
        make_scenario(groups=[make_group(), make_group()])


def test_scenario_defaults_and_lookups() -> None:
    """Test scenario defaults, app ids and relations."""
    relation = TemporalRelation(commands=(("garage-lock", "unlock"), ("garage-door", "open")))
    garage = make_group(name="garage", app_ids=["M3"]).model_copy(
        update={"relations": [relation]}
    )
    scenario = ScenarioConfig(groups=[make_group(), garage])
    assert scenario.n_events == 50
    assert scenario.period == 0.25
    assert scenario.app_ids == ["M1", "M3"]
    assert scenario.relations == [relation]
    assert scenario.group("garage") == garage
    with pytest.raises(KeyError):
        scenario.group("missing")


def test_period_must_be_positive() -> None:
    """Test a zero period is rejected."""
    with pytest.raises(ValidationError):
        ScenarioConfig(groups=[make_group()], period=0.0)


def test_empty_trace() -> None:
    """Test a trace without messages reports itself empty."""
    trace = Trace(topology=Topology.default(), scenario=make_scenario())
    assert trace.is_empty
    assert trace.complete
    assert trace.groups == ["oven"]


def test_per_source_pacing_spreads_each_round() -> None:
    """Test each of two sources fires every 1.5 periods under per-source pacing."""
    a = [make_stimulus(name="a0")]
    b = [make_stimulus(name="b0")]
    group = make_group(streams=[a, b]).model_copy(update={"pacing": "per-source"})
    events = group.expand(n_events=2, period=1.0)
    assert [e.ts for e in events] == [0.0, 0.75, 1.5, 2.25]
    single = make_group().model_copy(update={"pacing": "per-source"})
    assert [e.ts for e in single.expand(n_events=2, period=1.0)] == [0.0, 1.0]
