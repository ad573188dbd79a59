"""Tests for the discrete-event simulator."""

import itertools

import numpy as np
import pytest

from python.domain.apps.catalog import rules_by_id
from python.domain.detect.rates import entity_rates
from python.domain.home.exceptions import ConfigurationError
from python.domain.home.models import Action, AppRule, EventSpec, Handler, Hop, Trigger
from python.domain.home.topology import Topology
from python.domain.scenario.models import ScenarioGroup, StimulusTemplate

from ..exceptions import SchedulingError, SimulationError
from ..models import EventArrival
from ..simulator import GroupRun, Simulator, run
from .helpers import click, make_event_scenario, make_stream_scenario, temperature


def _group_run(app_ids: list[str], seed: int = 0) -> GroupRun:
    rules = rules_by_id()
    group = ScenarioGroup(name="g", app_ids=app_ids, events=[click("oven-on-click")])
    return GroupRun(
        group,
        [rules[app] for app in app_ids],
        Topology.default(),
        np.random.default_rng(seed),
        itertools.count(),
        itertools.count(),
        0.001,
    )


def test_three_hop_path_logs_every_hop() -> None:
    """Test an oven click travels app -> user cloud -> edge -> oven."""
    trace = run(make_event_scenario(["M1"], [click("oven-on-click", ts=1.0)]))
    (message,) = trace.messages
    assert [hop.component for hop in message.hops] == ["iot-cloud", "edge-hub", "smart-oven"]
    assert message.shared_hops == 1
    assert message.ta == message.hops[-1].time
    assert message.ta is not None and message.ta > message.ts == 1.0


def test_deterministic_links_sum_their_means() -> None:
    """Test ta equals ts plus the three link means when every std is zero."""
    trace = run(make_event_scenario(["M1"], [click("oven-on-click")], deterministic=True))
    (message,) = trace.messages
    assert [hop.time for hop in message.hops] == [1.5, 3.0, 3.056]
    assert message.ta == 3.056


def test_same_seed_same_trace() -> None:
    """Test identical scenario and seed produce identical traces."""
    stimuli = [
        StimulusTemplate(source="mobile-app", name="window-open-click"),
        StimulusTemplate(source="mobile-app", name="window-close-click"),
    ]
    first = run(make_stream_scenario("M4", stimuli, n_events=20, seed=5))
    second = run(make_stream_scenario("M4", stimuli, n_events=20, seed=5))
    other = run(make_stream_scenario("M4", stimuli, n_events=20, seed=6))
    assert first == second
    assert first.messages != other.messages


def test_zero_variance_preserves_order() -> None:
    """Test 50 window clicks over deterministic links are never misordered."""
    stimuli = [
        StimulusTemplate(source="mobile-app", name="window-open-click"),
        StimulusTemplate(source="mobile-app", name="window-close-click"),
    ]
    trace = run(make_stream_scenario("M4", stimuli, deterministic=True))
    assert len(trace.messages) == 50
    assert all(rate.misordered == 0 for rate in entity_rates(trace))


def test_random_delays_allow_overtaking() -> None:
    """Test independent hop delays reorder closely spaced messages."""
    stimuli = [
        StimulusTemplate(source="mobile-app", name="window-open-click"),
        StimulusTemplate(source="mobile-app", name="window-close-click"),
    ]
    trace = run(make_stream_scenario("M4", stimuli, period=0.05, seed=1))
    assert any(rate.misordered > 0 for rate in entity_rates(trace))


def test_garage_click_issues_unlock_then_open() -> None:
    """Test M3 sends two commands in declared order, 1 ms apart."""
    trace = run(make_event_scenario(["M3"], [click("garage-open-click")]))
    assert [(m.actuator, m.command) for m in trace.messages] == [
        ("garage-lock", "unlock"),
        ("garage-door", "open"),
    ]
    assert [m.issue_offset for m in trace.messages] == [0.0, 0.001]
    assert trace.messages[0].transit_id == trace.messages[1].transit_id
    assert trace.messages[0].hops[0] == trace.messages[1].hops[0]


def test_hot_reading_turns_fan_on() -> None:
    """Test 35 °C with IoT2 installed yields one fan-on message."""
    trace = run(make_event_scenario(["IoT2"], [temperature(35.0)]))
    assert [(m.actuator, m.command) for m in trace.messages] == [("smart-fan", "fan-on")]
    assert trace.terminated == []


def test_cool_reading_is_terminated_at_the_cloud() -> None:
    """Test 25 °C with IoT2 yields no message but logs the event transit."""
    trace = run(make_event_scenario(["IoT2"], [temperature(25.0)]))
    assert trace.messages == []
    (event,) = trace.terminated
    assert [hop.component for hop in event.hops] == ["edge-hub", "iot-cloud"]


def test_trigger_action_loop_visits_user_cloud_twice() -> None:
    """Test TA2's command returns through the user cloud and edge."""
    event = EventSpec(source="motion-sensor", name="motion-active", ts=0.0)
    trace = run(make_event_scenario(["TA2"], [event]))
    (message,) = trace.messages
    assert [hop.component for hop in message.hops] == [
        "edge-hub",
        "iot-cloud",
        "ifttt-cloud",
        "iot-cloud",
        "edge-hub",
        "smart-camera",
    ]
    assert message.shared_hops == 3


def test_groups_run_in_isolation_with_unique_ids() -> None:
    """Test msg ids stay unique across groups."""
    scenario = make_event_scenario(["M1"], [click("oven-on-click")])
    scenario = scenario.model_copy(
        update={
            "groups": [
                ScenarioGroup(name="a", app_ids=["M1"], events=[click("oven-on-click")]),
                ScenarioGroup(name="b", app_ids=["M1"], events=[click("oven-off-click")]),
            ]
        }
    )
    trace = run(scenario)
    assert [(m.msg_id, m.group) for m in trace.messages] == [(0, "a"), (1, "b")]


def test_undeclared_link_fails_before_running() -> None:
    """Test a rule routed over a missing link is rejected by validation."""
    rule = AppRule(
        id="X1",
        handlers=(
            Handler(
                trigger=Trigger(source="mobile-app", event="oven-on-click"),
                actions=(
                    Action(actuator="smart-oven", command="on", path=("edge-hub", "smart-oven")),
                ),
            ),
        ),
        host="edge-hub",
    )
    scenario = make_event_scenario(["X1"], [click("oven-on-click")]).model_copy(
        update={"rules": [rule]}
    )
    with pytest.raises(ConfigurationError):
        Simulator(scenario).run()


def test_unknown_stimulus_source() -> None:
    """Test a stream from an undeclared component is rejected."""
    stimuli = [StimulusTemplate(source="toaster", name="pop")]
    with pytest.raises(ConfigurationError):
        run(make_stream_scenario("M1", stimuli))


def test_inject_event_rejects_the_past() -> None:
    """Test events cannot be scheduled before the group clock."""
    group_run = _group_run(["M1"])
    group_run.env.run(until=5.0)
    with pytest.raises(SchedulingError):
        group_run.inject_event(click("oven-on-click", ts=1.0))


def test_inject_event_rejects_non_sources() -> None:
    """Test actuators cannot emit events."""
    group_run = _group_run(["M1"])
    with pytest.raises(ConfigurationError):
        group_run.inject_event(EventSpec(source="smart-oven", name="on", ts=0.0))
    assert group_run.inject_event(click("oven-on-click")) == 1
    assert group_run.inject_event(click("unrelated-click")) == 0


def test_dispatch_at_cloud() -> None:
    """Test the host cloud issues one message per matching action."""
    group_run = _group_run(["M3"])
    topology = Topology.default()
    arrival = EventArrival(
        event=click("garage-close-click"),
        rule=rules_by_id()["M3"],
        transit_id=0,
        hops=[Hop(component="iot-cloud", time=1.2)],
    )
    messages = group_run.dispatch_at_cloud(topology.component("iot-cloud"), arrival)
    assert [(m.actuator, m.command) for m in messages] == [
        ("garage-door", "close"),
        ("garage-lock", "lock"),
    ]
    assert all(m.shared_hops == 1 for m in messages)
    with pytest.raises(SimulationError):
        group_run.dispatch_at_cloud(topology.component("edge-hub"), arrival)
