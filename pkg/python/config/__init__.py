"""Configuration for the misordering simulator.

Settings come from a YAML file (``--config`` or ``MISORDER_CONFIG_FILE``),
overridden by ``MISORDER_*`` environment variables, and are validated by
pydantic.
"""

from python.config.settings import (
    CONFIG_FILE_ENV,
    DEFAULT_CONFIG_FILE,
    Settings,
    configure_logging,
    get_settings,
    set_settings,
)

__all__ = [
    "CONFIG_FILE_ENV",
    "DEFAULT_CONFIG_FILE",
    "Settings",
    "configure_logging",
    "get_settings",
    "set_settings",
]
