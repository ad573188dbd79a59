"""Trigger matching over app rules."""

from collections.abc import Iterable

from python.domain.home.models import AppRule, EventSpec, Handler


def match_rules(event: EventSpec, rules: Iterable[AppRule]) -> list[AppRule]:
    """Rules with a handler whose source, event name and value predicate all match.

    Order follows the input order.
    """
    return [rule for rule in rules if rule.matching_handlers(event)]


def subscribed_rules(event: EventSpec, rules: Iterable[AppRule]) -> list[AppRule]:
    """Rules subscribed to the event by source and name, predicates ignored."""
    return [rule for rule in rules if rule.subscribes(event)]


def _retarget(handler: Handler, threshold: float) -> Handler:
    predicate = handler.trigger.predicate
    if predicate is None:
        return handler
    trigger = handler.trigger.model_copy(
        update={"predicate": predicate.model_copy(update={"threshold": threshold})}
    )
    return handler.model_copy(update={"trigger": trigger})


def with_threshold(rule: AppRule, threshold: float) -> AppRule:
    """Copy of the rule with every value predicate's threshold replaced."""
    handlers = tuple(_retarget(handler, threshold) for handler in rule.handlers)
    return rule.model_copy(update={"handlers": handlers})
