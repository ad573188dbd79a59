"""Factory functions for scenario tests."""

from ..models import ScenarioConfig, ScenarioGroup, StimulusTemplate


def make_stimulus(source: str = "mobile-app", name: str = "oven-on-click") -> StimulusTemplate:
    return StimulusTemplate(source=source, name=name)


def make_group(
    name: str = "oven",
    app_ids: list[str] | None = None,
    streams: list[list[StimulusTemplate]] | None = None,
) -> ScenarioGroup:
    return ScenarioGroup(
        name=name,
        app_ids=app_ids or ["M1"],
        streams=streams
        or [[make_stimulus(name="oven-on-click"), make_stimulus(name="oven-off-click")]],
    )


def make_scenario(
    groups: list[ScenarioGroup] | None = None, n_events: int = 4, period: float = 0.25
) -> ScenarioConfig:
    return ScenarioConfig(groups=groups or [make_group()], n_events=n_events, period=period)
