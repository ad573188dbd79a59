"""Factory functions for engine tests."""

from python.domain.home.models import EventSpec, LinkDelayModel
from python.domain.home.topology import DEFAULT_LINKS
from python.domain.scenario.models import ScenarioConfig, ScenarioGroup, StimulusTemplate


def zero_variance_links() -> list[LinkDelayModel]:
    """Every default link row with its standard deviation set to zero."""
    return [link.model_copy(update={"std": 0.0}) for link in DEFAULT_LINKS]


def make_event_scenario(
    app_ids: list[str],
    events: list[EventSpec],
    seed: int = 0,
    deterministic: bool = False,
) -> ScenarioConfig:
    """One group running the given apps on explicit events."""
    return ScenarioConfig(
        name="manual",
        seed=seed,
        groups=[ScenarioGroup(name="manual", app_ids=app_ids, events=events)],
        link_overrides=zero_variance_links() if deterministic else [],
    )


def make_stream_scenario(
    app_id: str,
    stimuli: list[StimulusTemplate],
    n_events: int = 50,
    period: float = 0.25,
    seed: int = 0,
    deterministic: bool = False,
) -> ScenarioConfig:
    """One group cycling through stimuli for a single app."""
    return ScenarioConfig(
        name=app_id,
        n_events=n_events,
        period=period,
        seed=seed,
        groups=[ScenarioGroup(name=app_id, app_ids=[app_id], streams=[stimuli])],
        link_overrides=zero_variance_links() if deterministic else [],
    )


def click(name: str, ts: float = 0.0) -> EventSpec:
    return EventSpec(source="mobile-app", name=name, ts=ts)


def temperature(value: float, ts: float = 0.0) -> EventSpec:
    return EventSpec(
        source="temperature-sensor", name="temperature", value=value, unit="°C", ts=ts
    )
