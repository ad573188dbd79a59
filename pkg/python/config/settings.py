"""Simulator configuration: pydantic settings layered over an optional YAML file."""

import logging
import os
from contextvars import ContextVar
from pathlib import Path
from typing import Any, ClassVar, Literal

from pydantic import Field, ValidationError, field_validator
from pydantic.fields import FieldInfo
from pydantic_settings import (
    BaseSettings,
    PydanticBaseSettingsSource,
    SettingsConfigDict,
)
from ruamel.yaml import YAML

CONFIG_FILE_ENV = "MISORDER_CONFIG_FILE"
DEFAULT_CONFIG_FILE = "misorder.yaml"


class YamlConfigSettingsSource(PydanticBaseSettingsSource):
    """Settings source reading a YAML mapping; a missing file contributes nothing."""

    def __init__(self, settings_cls: type[BaseSettings], config_file: str | None = None):
        super().__init__(settings_cls)
        self.config_file = config_file or os.environ.get(CONFIG_FILE_ENV, DEFAULT_CONFIG_FILE)
        self.yaml_data: dict[str, Any] = {}
        self._load_yaml()

    def _load_yaml(self) -> None:
        config_path = Path(self.config_file)
        if not config_path.exists():
            logging.debug(f"No settings file at {config_path}, using defaults")
            return
        yaml = YAML(typ="safe")
        with config_path.open(encoding="utf-8") as f:
            data = yaml.load(f)
        if data is not None and not isinstance(data, dict):
            raise ValueError(f"{config_path} must contain a mapping of settings")
        self.yaml_data = data or {}
        logging.debug(f"Loaded {len(self.yaml_data)} settings from {config_path}")

    def get_field_value(
        self, field_info: FieldInfo, field_name: str
    ) -> tuple[Any, str, bool]:
        return self.yaml_data.get(field_name), field_name, False

    def __call__(self) -> dict[str, Any]:
        return self.yaml_data


class Settings(BaseSettings):
    """Simulator and experiment settings: environment, .env, then YAML."""

    model_config = SettingsConfigDict(
        env_prefix="MISORDER_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = "misorder"

    # Logging
    log_level: str = "INFO"

    # Output
    output_dir: Path = Path("results")

    # Experiments
    n_events: int = Field(default=50, ge=1)
    seeds: int = Field(default=20, ge=1)
    periods: list[float] = Field(
        default_factory=lambda: [0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0], min_length=1
    )
    max_workers: int = Field(default=4, ge=1)
    rate_mode: Literal["adjacent", "any", "state"] = "adjacent"

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        if value.upper() not in logging.getLevelNamesMapping():
            raise ValueError(f"unknown log level: {value}")
        return value.upper()

    @field_validator("periods")
    @classmethod
    def _positive_periods(cls, value: list[float]) -> list[float]:
        if any(period <= 0 for period in value):
            raise ValueError("periods must be positive")
        return value

    # Config file path for the next instantiation; set by load()
    _config_file: ClassVar[str | None] = None

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        config_file = cls._config_file
        # first = highest priority
        return (
            env_settings,
            dotenv_settings,
            YamlConfigSettingsSource(settings_cls, config_file),
            init_settings,
        )

    @classmethod
    def load(cls, config_file: str | None = None) -> "Settings":
        """Load settings from ``config_file`` (or ``MISORDER_CONFIG_FILE``) under env overrides.

        Raises ValidationError.
        """
        actual_config_file = config_file or os.environ.get(CONFIG_FILE_ENV, DEFAULT_CONFIG_FILE)

        cls._config_file = config_file
        try:
            return cls()
        except ValidationError as e:
            logging.error(f"Invalid settings in {actual_config_file}:\n{e}")
            raise
        finally:
            cls._config_file = None


# Active settings for the current context
_settings_context: ContextVar[Settings | None] = ContextVar("settings", default=None)


def get_settings() -> Settings:
    """Active settings, loaded on first use."""
    settings = _settings_context.get()
    if settings is None:
        settings = Settings.load()
        _settings_context.set(settings)
    return settings


def set_settings(settings: Settings) -> None:
    """Install settings for the current context (called by the CLI)."""
    _settings_context.set(settings)
    configure_logging(settings)


def configure_logging(settings: Settings) -> None:
    """Root logging at the configured level."""
    logging.basicConfig(
        level=settings.log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        force=True,
    )
