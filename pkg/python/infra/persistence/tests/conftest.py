"""Shared fixtures for persistence tests."""

import pytest

from python.domain.scenario.models import Trace
from python.infra.engine import run

from .helpers import make_scenario


@pytest.fixture
def sample_trace() -> Trace:
    return run(make_scenario())
