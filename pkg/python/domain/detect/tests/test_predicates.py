"""Tests for the P1/P2/P3 misordering detectors."""

import numpy as np
import pytest

from python.domain.home.exceptions import ConfigurationError
from python.domain.home.models import EventSpec, MessageRecord, TemporalRelation

from ..exceptions import EmptyTraceError, IncompleteMessageError
from ..predicates import brute_force, detect, detect_p1, detect_p2, detect_p3
from ..report import ALL_DETECTORS
from .helpers import RELATIONS, make_message, make_random_trace, make_trace


def test_p1_same_source_contradicting_commands() -> None:
    """Test a later command overtaking an earlier one from the same source."""
    trace = make_trace(
        [
            make_message(0, ts=0.0, ta=3.0, command="on"),
            make_message(1, ts=1.0, ta=2.0, command="off"),
        ]
    )
    violations = detect_p1(trace)
    assert [(v.kind, v.pair, v.entity) for v in violations] == [("P1", (1, 0), "smart-oven")]
    assert detect_p2(trace) == []


def test_p1_ignores_identical_commands() -> None:
    """Test overtaking with the same command is harmless."""
    trace = make_trace(
        [
            make_message(0, ts=0.0, ta=3.0),
            make_message(1, ts=1.0, ta=2.0),
        ]
    )
    assert detect_p1(trace) == []


def test_p2_different_sources() -> None:
    """Test overtaking between two sources commanding one actuator."""
    trace = make_trace(
        [
            make_message(0, ts=0.0, ta=3.0, command="lock", source="mobile-app"),
            make_message(1, ts=1.0, ta=2.0, command="unlock", source="motion-sensor"),
        ]
    )
    assert [v.pair for v in detect_p2(trace)] == [(1, 0)]
    assert detect_p1(trace) == []


def test_ties_are_not_violations() -> None:
    """Test equal creation or arrival times never count as inverted."""
    trace = make_trace(
        [
            make_message(0, ts=1.0, ta=3.0, command="on"),
            make_message(1, ts=1.0, ta=2.0, command="off"),
            make_message(2, ts=2.0, ta=3.0, command="off"),
        ]
    )
    assert detect_p1(trace) == []


def test_groups_are_compared_separately() -> None:
    """Test messages of different scenario groups never form a pair."""
    trace = make_trace(
        [
            make_message(0, ts=0.0, ta=3.0, command="on", group="a"),
            make_message(1, ts=1.0, ta=2.0, command="off", group="b"),
        ],
        groups=("a", "b"),
    )
    assert detect_p1(trace) == []


def test_p3_related_commands_of_different_actuators() -> None:
    """Test a shade/window relation received in the wrong order."""
    trace = make_trace(
        [
            make_message(0, ts=0.0, ta=3.0, actuator="window-shade", command="open"),
            make_message(1, ts=0.001, ta=2.0, actuator="window", command="open"),
        ],
        relations=RELATIONS,
    )
    violations = detect_p3(trace)
    assert [(v.pair, v.entity) for v in violations] == [((1, 0), "window")]
    assert detect_p3(trace, relations=[]) == []


def test_p3_unknown_actuator_in_relation() -> None:
    """Test relations must name actuators of the topology."""
    trace = make_trace([make_message(0, ts=0.0, ta=1.0)])
    relation = TemporalRelation(commands=(("toaster", "on"), ("window", "open")))
    with pytest.raises(ConfigurationError):
        detect_p3(trace, [relation])


def test_single_message_has_no_violations() -> None:
    """Test one message can never be misordered."""
    trace = make_trace([make_message(0, ts=0.0, ta=1.0)], relations=RELATIONS)
    for kind in ALL_DETECTORS:
        assert detect(trace, kind) == []


def test_empty_trace_is_rejected() -> None:
    """Test detectors refuse a trace without messages."""
    with pytest.raises(EmptyTraceError):
        detect_p1(make_trace([]))


def test_incomplete_message_is_rejected() -> None:
    """Test detectors name the message that never arrived."""
    in_flight = MessageRecord(
        msg_id=7,
        rule_id="R",
        event=EventSpec(source="mobile-app", name="e", ts=0.0),
        actuator="smart-oven",
        command="on",
    )
    trace = make_trace([make_message(0, ts=0.0, ta=1.0), in_flight])
    with pytest.raises(IncompleteMessageError) as exc_info:
        detect_p2(trace)
    assert exc_info.value.msg_id == 7


def test_detectors_match_brute_force_on_random_traces() -> None:
    """Test vectorized detectors equal the pairwise oracle on 1000 random traces."""
    rng = np.random.default_rng(2024)
    for index in range(1000):
        n = 200 if index % 100 == 0 else int(rng.integers(1, 61))
        trace = make_random_trace(rng, n)
        for kind in ALL_DETECTORS:
            expected = brute_force(trace, kind)
            assert detect(trace, kind) == expected, f"{kind} differs on trace {index}"
