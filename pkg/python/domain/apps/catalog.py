"""Built-in catalog of the 23 trigger-action apps installed in the default house.

Every action carries its full message path (excluding the event source) so the
engine can route it hop by hop without consulting the rule again.
"""

from python.domain.home.models import Action, AppRule, Handler, Trigger, ValuePredicate

# Experiment tags.
EXP_SINGLE_SOURCE = 1
EXP_MULTI_SOURCE = 2
EXP_TEMPORAL = 3

DEFAULT_THRESHOLD_C = 30.0
DEFAULT_POWER_LIMIT_W = 1500.0

USER_CLOUD = "iot-cloud"
TA_CLOUD = "ifttt-cloud"
EDGE = "edge-hub"


def _act(actuator: str, command: str, *via: str) -> Action:
    return Action(actuator=actuator, command=command, path=(*via, actuator))


def _on(
    source: str,
    event: str,
    *actions: Action,
    predicate: ValuePredicate | None = None,
) -> Handler:
    trigger = Trigger(source=source, event=event, predicate=predicate)
    return Handler(trigger=trigger, actions=actions)


def _rule(
    rule_id: str,
    description: str,
    *handlers: Handler,
    host: str = USER_CLOUD,
    experiments: tuple[int, ...] = (),
) -> AppRule:
    return AppRule(
        id=rule_id,
        description=description,
        handlers=handlers,
        host=host,
        experiments=frozenset(experiments),
    )


def _value(op: str, threshold: float, unit: str | None = None) -> ValuePredicate:
    return ValuePredicate(op=op, threshold=threshold, unit=unit)  # type: ignore[arg-type]


# Path prefixes shared by several rules.
_APP_TO_EDGE = (USER_CLOUD, EDGE)  # mobile app -> user cloud -> edge
_LOCAL = (EDGE, USER_CLOUD, EDGE)  # sensor -> edge -> user cloud -> edge
_TA_LOOP = (EDGE, USER_CLOUD, TA_CLOUD, USER_CLOUD, EDGE)
_TA_HUE = (EDGE, USER_CLOUD, TA_CLOUD, "hue-cloud")
_LOCAL_HUE = (EDGE, USER_CLOUD, "hue-cloud")
_SPRINKLER = (EDGE, USER_CLOUD, TA_CLOUD, "partner-iot-cloud", EDGE)


def builtin_catalog() -> list[AppRule]:
    """Return the 23 built-in app rules in catalog order."""
    hot = _value(">", DEFAULT_THRESHOLD_C, "°C")
    cool = _value("<=", DEFAULT_THRESHOLD_C, "°C")
    return [
        _rule(
            "M1",
            "Start or stop the smart oven through the mobile application.",
            _on("mobile-app", "oven-on-click", _act("smart-oven", "on", *_APP_TO_EDGE)),
            _on("mobile-app", "oven-off-click", _act("smart-oven", "off", *_APP_TO_EDGE)),
            experiments=(EXP_SINGLE_SOURCE,),
        ),
        _rule(
            "M2",
            "Turn the smart plug on or off through the mobile application.",
            _on("mobile-app", "plug-on-click", _act("smart-plug", "on", *_APP_TO_EDGE)),
            _on("mobile-app", "plug-off-click", _act("smart-plug", "off", *_APP_TO_EDGE)),
            experiments=(EXP_MULTI_SOURCE,),
        ),
        _rule(
            "M3",
            "Unlock then open the garage door, or close then lock it, from the mobile app.",
            _on(
                "mobile-app",
                "garage-open-click",
                _act("garage-lock", "unlock", *_APP_TO_EDGE),
                _act("garage-door", "open", *_APP_TO_EDGE),
            ),
            _on(
                "mobile-app",
                "garage-close-click",
                _act("garage-door", "close", *_APP_TO_EDGE),
                _act("garage-lock", "lock", *_APP_TO_EDGE),
            ),
            experiments=(EXP_TEMPORAL,),
        ),
        _rule(
            "M4",
            "Open or close the window through the mobile application.",
            _on("mobile-app", "window-open-click", _act("window", "open", *_APP_TO_EDGE)),
            _on("mobile-app", "window-close-click", _act("window", "close", *_APP_TO_EDGE)),
            experiments=(EXP_TEMPORAL,),
        ),
        _rule(
            "TA1",
            "Save periodic temperature readings to a Google spreadsheet.",
            _on(
                "temperature-sensor",
                "temperature",
                _act("google-cloud", "append-row", EDGE, USER_CLOUD, TA_CLOUD),
            ),
            host=TA_CLOUD,
            experiments=(EXP_SINGLE_SOURCE,),
        ),
        _rule(
            "TA2",
            "Activate the camera on motion, otherwise deactivate it.",
            _on("motion-sensor", "motion-active", _act("smart-camera", "activate", *_TA_LOOP)),
            _on(
                "motion-sensor", "motion-inactive", _act("smart-camera", "deactivate", *_TA_LOOP)
            ),
            host=TA_CLOUD,
            experiments=(EXP_SINGLE_SOURCE,),
        ),
        _rule(
            "TA3",
            "Stop the smart fan when the temperature drops to the threshold or below.",
            _on(
                "temperature-sensor",
                "temperature",
                _act("smart-fan", "fan-off", *_TA_LOOP),
                predicate=cool,
            ),
            host=TA_CLOUD,
            experiments=(EXP_SINGLE_SOURCE,),
        ),
        _rule(
            "TA4",
            "Turn on the Hue light when the doorbell rings.",
            _on("doorbell", "ring", _act("hue-light", "on", *_TA_HUE)),
            host=TA_CLOUD,
            experiments=(EXP_MULTI_SOURCE,),
        ),
        _rule(
            "TA5",
            "Turn on the Hue light on motion.",
            _on("motion-sensor", "motion-active", _act("hue-light", "on", *_TA_HUE)),
            host=TA_CLOUD,
            experiments=(EXP_MULTI_SOURCE,),
        ),
        _rule(
            "TA6",
            "Set or clear the thermostat through the IFTTT mobile application.",
            _on(
                "ifttt-app",
                "thermostat-set-click",
                _act("smart-thermostat", "set", TA_CLOUD, USER_CLOUD, EDGE),
            ),
            _on(
                "ifttt-app",
                "thermostat-clear-click",
                _act("smart-thermostat", "clear", TA_CLOUD, USER_CLOUD, EDGE),
            ),
            host=TA_CLOUD,
            experiments=(EXP_SINGLE_SOURCE, EXP_MULTI_SOURCE),
        ),
        _rule(
            "IoT1",
            "Open the window when smoke is detected, otherwise close it.",
            _on("smoke-sensor", "smoke-detected", _act("window", "open", *_LOCAL)),
            _on("smoke-sensor", "smoke-clear", _act("window", "close", *_LOCAL)),
            experiments=(EXP_SINGLE_SOURCE,),
        ),
        _rule(
            "IoT2",
            "Start the smart fan when the temperature is above the threshold.",
            _on(
                "temperature-sensor",
                "temperature",
                _act("smart-fan", "fan-on", *_LOCAL),
                predicate=hot,
            ),
            experiments=(EXP_SINGLE_SOURCE,),
        ),
        _rule(
            "IoT3",
            "Arm the alarm when everyone leaves the house, otherwise disarm it.",
            *(
                _on(sensor, event, _act("smart-alarm", command, *_LOCAL))
                for sensor in ("presence-sensor-1", "presence-sensor-2")
                for event, command in (("departed", "arm"), ("arrived", "disarm"))
            ),
            experiments=(EXP_MULTI_SOURCE,),
        ),
        _rule(
            "IoT4",
            "Unlock the door on motion, otherwise lock it.",
            _on("motion-sensor", "motion-active", _act("smart-lock", "unlock", *_LOCAL)),
            _on("motion-sensor", "motion-inactive", _act("smart-lock", "lock", *_LOCAL)),
            experiments=(EXP_MULTI_SOURCE,),
        ),
        _rule(
            "IoT5",
            "Lock or unlock the door through the voice assistant.",
            _on(
                "google-assistant",
                "lock-door",
                _act("smart-lock", "lock", "google-cloud", USER_CLOUD, EDGE),
            ),
            _on(
                "google-assistant",
                "unlock-door",
                _act("smart-lock", "unlock", "google-cloud", USER_CLOUD, EDGE),
            ),
            experiments=(EXP_SINGLE_SOURCE, EXP_MULTI_SOURCE),
        ),
        _rule(
            "IoT6",
            "Lock or unlock the door with a button.",
            _on("lock-button", "push", _act("smart-lock", "lock", *_LOCAL)),
            _on("lock-button", "hold", _act("smart-lock", "unlock", *_LOCAL)),
            experiments=(EXP_MULTI_SOURCE,),
        ),
        _rule(
            "IoT7",
            "Turn the Hue light on and off with a button.",
            _on("hue-button", "push", _act("hue-light", "on", *_LOCAL_HUE)),
            _on("hue-button", "hold", _act("hue-light", "off", *_LOCAL_HUE)),
            experiments=(EXP_SINGLE_SOURCE, EXP_MULTI_SOURCE),
        ),
        _rule(
            "IoT8",
            "Turn the Hue light on while the door is open, off when it closes.",
            _on("door-contact", "contact-open", _act("hue-light", "on", *_LOCAL_HUE)),
            _on("door-contact", "contact-closed", _act("hue-light", "off", *_LOCAL_HUE)),
            experiments=(EXP_MULTI_SOURCE,),
        ),
        _rule(
            "IoT9",
            "Turn off the plug when power consumption exceeds the threshold.",
            _on(
                "power-meter",
                "power",
                _act("smart-plug", "off", *_LOCAL),
                predicate=_value(">", DEFAULT_POWER_LIMIT_W, "W"),
            ),
            experiments=(EXP_MULTI_SOURCE,),
        ),
        _rule(
            "IoT10",
            "Stop the thermostat while the window is open, otherwise start it.",
            _on("window-contact", "contact-open", _act("smart-thermostat", "stop", *_LOCAL)),
            _on("window-contact", "contact-closed", _act("smart-thermostat", "start", *_LOCAL)),
            experiments=(EXP_MULTI_SOURCE,),
        ),
        _rule(
            "IoT11",
            "Turn the thermostat on with motion, otherwise turn it off.",
            _on("motion-sensor", "motion-active", _act("smart-thermostat", "on", *_LOCAL)),
            _on("motion-sensor", "motion-inactive", _act("smart-thermostat", "off", *_LOCAL)),
            experiments=(EXP_MULTI_SOURCE,),
        ),
        _rule(
            "IoT12",
            "Open or close the window shade with a switch.",
            _on("shade-switch", "switch-on", _act("window-shade", "open", *_LOCAL)),
            _on("shade-switch", "switch-off", _act("window-shade", "close", *_LOCAL)),
            experiments=(EXP_TEMPORAL,),
        ),
        _rule(
            "IoT13",
            "Open or close the sprinkler valve on push; start or stop irrigation on hold.",
            _on(
                "sprinkler-button",
                "push",
                _act("sprinkler-valve", "open", *_SPRINKLER),
                predicate=_value("=", 1),
            ),
            _on(
                "sprinkler-button",
                "push",
                _act("sprinkler-valve", "close", *_SPRINKLER),
                predicate=_value("=", 0),
            ),
            _on(
                "sprinkler-button",
                "hold",
                _act("irrigation-system", "start", *_SPRINKLER),
                predicate=_value("=", 1),
            ),
            _on(
                "sprinkler-button",
                "hold",
                _act("irrigation-system", "stop", *_SPRINKLER),
                predicate=_value("=", 0),
            ),
            host=TA_CLOUD,
            experiments=(EXP_TEMPORAL,),
        ),
    ]


def rules_by_id(rules: list[AppRule] | None = None) -> dict[str, AppRule]:
    return {rule.id: rule for rule in (builtin_catalog() if rules is None else rules)}


def tagged(experiment: int, rules: list[AppRule] | None = None) -> list[AppRule]:
    """Rules tagged for an experiment, in catalog order."""
    rules = builtin_catalog() if rules is None else rules
    return [rule for rule in rules if experiment in rule.experiments]
