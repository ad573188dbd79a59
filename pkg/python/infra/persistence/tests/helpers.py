"""Factory functions for persistence tests."""

from python.domain.home.models import TemporalRelation
from python.domain.scenario.models import ScenarioConfig, ScenarioGroup, StimulusTemplate

SCENARIO_YAML = """\
name: home
seed: 7
n_events: 4
groups:
  - name: garage
    app_ids: [M3]
    streams:
      - - {source: mobile-app, name: garage-open-click}
        - {source: mobile-app, name: garage-close-click}
    relations:
      - commands: [[garage-lock, unlock], [garage-door, open]]
"""


def make_scenario(seed: int = 3, n_events: int = 6) -> ScenarioConfig:
    """A garage group with an ordering relation and a fan group that drops cool readings."""
    garage = ScenarioGroup(
        name="garage",
        app_ids=["M3"],
        streams=[
            [
                StimulusTemplate(source="mobile-app", name="garage-open-click"),
                StimulusTemplate(source="mobile-app", name="garage-close-click"),
            ]
        ],
        relations=[
            TemporalRelation(commands=(("garage-lock", "unlock"), ("garage-door", "open")))
        ],
    )
    fan = ScenarioGroup(
        name="fan",
        app_ids=["IoT2"],
        streams=[
            [
                StimulusTemplate(
                    source="temperature-sensor", name="temperature", value=25.0, unit="°C"
                ),
                StimulusTemplate(
                    source="temperature-sensor", name="temperature", value=35.0, unit="°C"
                ),
            ]
        ],
    )
    return ScenarioConfig(name="home", seed=seed, n_events=n_events, groups=[garage, fan])
