"""Scenario generators for the three misordering experiments.

1. Single source: each tagged app runs alone, its source alternating between
   stimuli that cause contradicting commands.
2. Multiple sources: apps sharing an actuator run together, their sources
   interleaved round-robin, each firing about once per period.
3. Temporal relations: apps whose commands must arrive in a declared order,
   stimuli emitted in that order.
"""

from python.domain.apps.catalog import (
    DEFAULT_POWER_LIMIT_W,
    DEFAULT_THRESHOLD_C,
    EXP_MULTI_SOURCE,
    EXP_SINGLE_SOURCE,
    EXP_TEMPORAL,
    tagged,
)
from python.domain.detect.models import ENTITY_CLASSES, EntityClass
from python.domain.home.models import TemporalRelation
from python.domain.scenario.models import (
    DEFAULT_N_EVENTS,
    ScenarioConfig,
    ScenarioGroup,
    StimulusTemplate,
)

from .exceptions import ExperimentError

DEFAULT_PERIODS: tuple[float, ...] = (0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0)

# Entity classes reported per experiment.
EXPERIMENT_CLASSES: dict[int, tuple[EntityClass, ...]] = {
    EXP_SINGLE_SOURCE: ("user-cloud", "actuator"),
    EXP_MULTI_SOURCE: ("user-cloud", "trigger-action-cloud", "actuator"),
    EXP_TEMPORAL: ENTITY_CLASSES,
}


def _s(
    source: str, name: str, value: float | None = None, unit: str | None = None
) -> StimulusTemplate:
    return StimulusTemplate(source=source, name=name, value=value, unit=unit)


_COOL = DEFAULT_THRESHOLD_C - 5
_HOT = DEFAULT_THRESHOLD_C + 5

# Alternating stimuli per single-source app.
SINGLE_SOURCE_STIMULI: dict[str, list[StimulusTemplate]] = {
    "M1": [_s("mobile-app", "oven-on-click"), _s("mobile-app", "oven-off-click")],
    "TA1": [
        _s("temperature-sensor", "temperature", _COOL, "°C"),
        _s("temperature-sensor", "temperature", _HOT, "°C"),
    ],
    "TA2": [_s("motion-sensor", "motion-active"), _s("motion-sensor", "motion-inactive")],
    "TA3": [
        _s("temperature-sensor", "temperature", _HOT, "°C"),
        _s("temperature-sensor", "temperature", _COOL, "°C"),
    ],
    "TA6": [_s("ifttt-app", "thermostat-set-click"), _s("ifttt-app", "thermostat-clear-click")],
    "IoT1": [_s("smoke-sensor", "smoke-detected"), _s("smoke-sensor", "smoke-clear")],
    "IoT2": [
        _s("temperature-sensor", "temperature", _COOL, "°C"),
        _s("temperature-sensor", "temperature", _HOT, "°C"),
    ],
    "IoT5": [_s("google-assistant", "lock-door"), _s("google-assistant", "unlock-door")],
    "IoT7": [_s("hue-button", "push"), _s("hue-button", "hold")],
}

# Groups of apps sharing one actuator, with one stimulus stream per source.
# Each stream lists its stimuli in the same command polarity, so round-robin
# emission alternates contradicting commands.
MULTI_SOURCE_GROUPS: dict[str, tuple[list[str], list[list[StimulusTemplate]]]] = {
    "alarm": (
        ["IoT3"],
        [
            [_s("presence-sensor-1", "departed"), _s("presence-sensor-1", "arrived")],
            [_s("presence-sensor-2", "departed"), _s("presence-sensor-2", "arrived")],
        ],
    ),
    "lock": (
        ["IoT4", "IoT5", "IoT6"],
        [
            [_s("motion-sensor", "motion-active"), _s("motion-sensor", "motion-inactive")],
            [_s("google-assistant", "unlock-door"), _s("google-assistant", "lock-door")],
            [_s("lock-button", "hold"), _s("lock-button", "push")],
        ],
    ),
    "hue": (
        ["TA4", "TA5", "IoT7", "IoT8"],
        [
            [_s("doorbell", "ring")],
            [_s("motion-sensor", "motion-active")],
            [_s("hue-button", "push"), _s("hue-button", "hold")],
            [_s("door-contact", "contact-open"), _s("door-contact", "contact-closed")],
        ],
    ),
    "plug": (
        ["M2", "IoT9"],
        [
            [_s("mobile-app", "plug-on-click"), _s("mobile-app", "plug-off-click")],
            [
                _s("power-meter", "power", DEFAULT_POWER_LIMIT_W - 500, "W"),
                _s("power-meter", "power", DEFAULT_POWER_LIMIT_W + 500, "W"),
            ],
        ],
    ),
    "thermostat": (
        ["IoT10", "TA6", "IoT11"],
        [
            [_s("window-contact", "contact-closed"), _s("window-contact", "contact-open")],
            [_s("ifttt-app", "thermostat-set-click"), _s("ifttt-app", "thermostat-clear-click")],
            [_s("motion-sensor", "motion-active"), _s("motion-sensor", "motion-inactive")],
        ],
    ),
}


def _relation(*commands: tuple[str, str]) -> TemporalRelation:
    return TemporalRelation(commands=commands)


TEMPORAL_GROUPS: dict[str, tuple[list[str], list[StimulusTemplate], list[TemporalRelation]]] = {
    "garage": (
        ["M3"],
        [_s("mobile-app", "garage-open-click"), _s("mobile-app", "garage-close-click")],
        [
            _relation(("garage-lock", "unlock"), ("garage-door", "open")),
            _relation(("garage-door", "close"), ("garage-lock", "lock")),
        ],
    ),
    "sprinkler": (
        ["IoT13"],
        [
            _s("sprinkler-button", "push", 1),
            _s("sprinkler-button", "hold", 1),
            _s("sprinkler-button", "hold", 0),
            _s("sprinkler-button", "push", 0),
        ],
        [
            _relation(("sprinkler-valve", "open"), ("irrigation-system", "start")),
            _relation(("irrigation-system", "stop"), ("sprinkler-valve", "close")),
        ],
    ),
    "window": (
        ["IoT12", "M4"],
        [
            _s("shade-switch", "switch-on"),
            _s("mobile-app", "window-open-click"),
            _s("mobile-app", "window-close-click"),
            _s("shade-switch", "switch-off"),
        ],
        [
            _relation(("window-shade", "open"), ("window", "open")),
            _relation(("window", "close"), ("window-shade", "close")),
        ],
    ),
}


def _single_source_groups() -> list[ScenarioGroup]:
    return [
        ScenarioGroup(name=rule.id, app_ids=[rule.id], streams=[SINGLE_SOURCE_STIMULI[rule.id]])
        for rule in tagged(EXP_SINGLE_SOURCE)
    ]


def _multi_source_groups() -> list[ScenarioGroup]:
    return [
        ScenarioGroup(name=name, app_ids=app_ids, streams=streams, pacing="per-source")
        for name, (app_ids, streams) in MULTI_SOURCE_GROUPS.items()
    ]


def _temporal_groups() -> list[ScenarioGroup]:
    return [
        ScenarioGroup(name=name, app_ids=app_ids, streams=[stimuli], relations=relations)
        for name, (app_ids, stimuli, relations) in TEMPORAL_GROUPS.items()
    ]


def generate_scenario(
    experiment: int, period: float, seed: int, n_events: int = DEFAULT_N_EVENTS
) -> ScenarioConfig:
    """Build the scenario for one (experiment, period, seed) cell.

    Raises ExperimentError.
    """
    builders = {
        EXP_SINGLE_SOURCE: _single_source_groups,
        EXP_MULTI_SOURCE: _multi_source_groups,
        EXP_TEMPORAL: _temporal_groups,
    }
    if experiment not in builders:
        raise ExperimentError(
            f"Unknown experiment: {experiment}", context={"experiment": str(experiment)}
        )
    return ScenarioConfig(
        name=f"exp{experiment}",
        experiment=experiment,
        n_events=n_events,
        period=period,
        seed=seed,
        groups=builders[experiment](),
    )
