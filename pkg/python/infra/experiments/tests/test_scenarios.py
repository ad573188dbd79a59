"""Tests for the experiment scenario generators."""

import pytest

from python.domain.apps.catalog import EXP_SINGLE_SOURCE, tagged
from python.infra.engine import Simulator

from ..exceptions import ExperimentError
from ..scenarios import (
    EXPERIMENT_CLASSES,
    MULTI_SOURCE_GROUPS,
    SINGLE_SOURCE_STIMULI,
    generate_scenario,
)


def test_single_source_groups_follow_catalog_tags() -> None:
    """Test experiment 1 runs each tagged app alone on one alternating stream."""
    scenario = generate_scenario(1, 0.25, seed=3)
    assert [g.name for g in scenario.groups] == [r.id for r in tagged(EXP_SINGLE_SOURCE)]
    assert sorted(SINGLE_SOURCE_STIMULI) == sorted(g.name for g in scenario.groups)
    for group in scenario.groups:
        assert group.app_ids == [group.name]
        assert len(group.streams) == 1
        assert len(group.streams[0]) == 2
    assert scenario.name == "exp1"
    assert scenario.seed == 3
    assert scenario.period == 0.25


def test_multi_source_groups_share_actuators() -> None:
    """Test experiment 2 groups apps commanding one actuator."""
    scenario = generate_scenario(2, 0.5, seed=0)
    assert [g.name for g in scenario.groups] == list(MULTI_SOURCE_GROUPS)
    lock = next(g for g in scenario.groups if g.name == "lock")
    assert lock.app_ids == ["IoT4", "IoT5", "IoT6"]
    assert len(lock.streams) == 3
    assert all(g.pacing == "per-source" for g in scenario.groups)
    assert generate_scenario(1, 0.5, seed=0).groups[0].pacing == "shared"


def test_temporal_groups_carry_relations() -> None:
    """Test experiment 3 groups declare their command orderings."""
    scenario = generate_scenario(3, 1.0, seed=0, n_events=8)
    assert [g.name for g in scenario.groups] == ["garage", "sprinkler", "window"]
    garage = scenario.groups[0]
    assert [r.commands for r in garage.relations] == [
        (("garage-lock", "unlock"), ("garage-door", "open")),
        (("garage-door", "close"), ("garage-lock", "lock")),
    ]
    assert scenario.n_events == 8


@pytest.mark.parametrize("experiment", [1, 2, 3])
def test_generated_scenarios_validate(experiment: int) -> None:
    """Test every generated scenario passes topology validation."""
    Simulator(generate_scenario(experiment, 0.25, seed=0)).validate()


def test_unknown_experiment() -> None:
    """Test an unknown experiment number raises ExperimentError."""
    with pytest.raises(ExperimentError, match="Unknown experiment"):
        generate_scenario(4, 0.25, seed=0)


def test_reported_entity_classes() -> None:
    """Test each experiment reports the expected entity classes."""
    assert EXPERIMENT_CLASSES[1] == ("user-cloud", "actuator")
    assert EXPERIMENT_CLASSES[2] == ("user-cloud", "trigger-action-cloud", "actuator")
    assert len(EXPERIMENT_CLASSES[3]) == 5
