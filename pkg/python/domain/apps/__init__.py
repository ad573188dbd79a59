"""App rule catalog and trigger matching."""

from .catalog import (
    DEFAULT_POWER_LIMIT_W,
    DEFAULT_THRESHOLD_C,
    EXP_MULTI_SOURCE,
    EXP_SINGLE_SOURCE,
    EXP_TEMPORAL,
    builtin_catalog,
    rules_by_id,
    tagged,
)
from .matching import match_rules, subscribed_rules, with_threshold

__all__ = [
    "DEFAULT_POWER_LIMIT_W",
    "DEFAULT_THRESHOLD_C",
    "EXP_MULTI_SOURCE",
    "EXP_SINGLE_SOURCE",
    "EXP_TEMPORAL",
    "builtin_catalog",
    "match_rules",
    "rules_by_id",
    "subscribed_rules",
    "tagged",
    "with_threshold",
]
