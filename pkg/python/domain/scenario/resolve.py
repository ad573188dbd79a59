"""Resolve a scenario against the built-in house and app catalog."""

from python.domain.apps.catalog import builtin_catalog
from python.domain.apps.matching import with_threshold
from python.domain.home.exceptions import ConfigurationError
from python.domain.home.models import AppRule
from python.domain.home.topology import Topology

from .models import ScenarioConfig, ScenarioGroup


def resolve_topology(scenario: ScenarioConfig) -> Topology:
    """Default topology plus the scenario's extra components and link overrides."""
    return (
        Topology.default()
        .with_components(scenario.components)
        .with_link_overrides(scenario.link_overrides)
    )


def resolve_rules(scenario: ScenarioConfig) -> dict[str, AppRule]:
    """Every rule the scenario can reference, thresholds applied, keyed by id.

    Raises ConfigurationError.
    """
    rules = {rule.id: rule for rule in builtin_catalog()}
    rules.update({rule.id: rule for rule in scenario.rules})
    for rule_id, threshold in scenario.threshold_overrides.items():
        if rule_id not in rules:
            raise ConfigurationError(
                f"Threshold override for unknown app: {rule_id}", context={"app": rule_id}
            )
        rules[rule_id] = with_threshold(rules[rule_id], threshold)
    missing = [app for app in scenario.app_ids if app not in rules]
    if missing:
        raise ConfigurationError(
            f"Unknown app ids: {', '.join(missing)}", context={"scenario": scenario.name}
        )
    return rules


def group_rules(group: ScenarioGroup, rules: dict[str, AppRule]) -> list[AppRule]:
    """Rules installed in one group, in the group's declared order."""
    return [rules[app] for app in group.app_ids]
