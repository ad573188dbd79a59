"""Dependency injection for experiment runs."""

import inspect
from collections.abc import Callable, Generator
from contextlib import contextmanager
from functools import wraps
from typing import Any, TypeVar, cast

from reactivex.abc import SchedulerBase
from reactivex.scheduler import ThreadPoolScheduler

from python.config.settings import Settings, get_settings

F = TypeVar("F", bound=Callable[..., Any])

# Dependency registry for testing/overrides
_dependency_overrides: dict[str, Callable[[], Any]] = {}


def get_experiment_settings() -> Settings:
    if "settings" in _dependency_overrides:
        return cast("Settings", _dependency_overrides["settings"]())
    return get_settings()


def get_scheduler(settings: Settings | None = None) -> SchedulerBase:
    """Worker pool that runs experiment cells."""
    if "scheduler" in _dependency_overrides:
        return cast("SchedulerBase", _dependency_overrides["scheduler"]())
    settings = settings or get_experiment_settings()
    return ThreadPoolScheduler(settings.max_workers)


def _wants(func: Callable[..., Any], name: str, kwargs: dict[str, Any]) -> bool:
    if name in kwargs:
        return kwargs[name] is None
    param = inspect.signature(func).parameters.get(name)
    return param is not None and (param.default is None or param.default is param.empty)


def inject_deps(func: F) -> F:
    """Decorator filling ``settings`` and ``scheduler`` parameters left as None."""

    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        if _wants(func, "settings", kwargs):
            kwargs["settings"] = get_experiment_settings()
        owned: ThreadPoolScheduler | None = None
        if _wants(func, "scheduler", kwargs):
            kwargs["scheduler"] = get_scheduler(kwargs.get("settings"))
            if "scheduler" not in _dependency_overrides:
                owned = cast("ThreadPoolScheduler", kwargs["scheduler"])
        try:
            return func(*args, **kwargs)
        finally:
            # pools built here die with the call; overrides belong to the caller
            if owned is not None:
                owned.executor.shutdown(wait=False)

    return cast("F", wrapper)


# Testing support


@contextmanager
def override_dependency(name: str, factory: Callable[[], Any]) -> Generator[None, None, None]:
    """Override a dependency for testing."""
    previous = _dependency_overrides.get(name)
    _dependency_overrides[name] = factory
    try:
        yield
    finally:
        if previous is not None:
            _dependency_overrides[name] = previous
        else:
            _dependency_overrides.pop(name, None)


def clear_overrides() -> None:
    _dependency_overrides.clear()
