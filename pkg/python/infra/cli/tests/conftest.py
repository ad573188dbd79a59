"""Shared fixtures for CLI tests."""

import logging
from collections.abc import Generator

import pytest

from python.config.settings import _settings_context


@pytest.fixture(autouse=True)
def restore_global_state() -> Generator[None, None, None]:
    """Undo the logging setup and active settings installed by ``main``."""
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    token = _settings_context.set(None)
    yield
    _settings_context.reset(token)
    root.handlers[:] = handlers
    root.setLevel(level)
