"""Shared fixtures for experiment tests: small settings on an immediate scheduler."""

from collections.abc import Generator

import pytest
from reactivex.scheduler import ImmediateScheduler

from python.config import Settings

from ..dependencies import clear_overrides, override_dependency


@pytest.fixture
def small_settings() -> Settings:
    return Settings(seeds=2, periods=[0.25, 2.0], n_events=10, max_workers=2)


@pytest.fixture(autouse=True)
def immediate_scheduler(small_settings: Settings) -> Generator[None, None, None]:
    """Run every cell on the calling thread with the small settings."""
    with (
        override_dependency("scheduler", ImmediateScheduler),
        override_dependency("settings", lambda: small_settings),
    ):
        yield
    clear_overrides()
