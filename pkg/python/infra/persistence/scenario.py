"""Scenario and temporal-relation files (YAML, or JSON as its subset)."""

import logging
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from pydantic import TypeAdapter, ValidationError
from ruamel.yaml import YAML
from ruamel.yaml.error import MarkedYAMLError

from python.domain.home.models import TemporalRelation
from python.domain.scenario.models import ScenarioConfig

from .exceptions import ScenarioFileError

logger = logging.getLogger(__name__)

_RELATIONS = TypeAdapter(list[TemporalRelation])


def _load_document(path: Path) -> Any:
    """Raises ScenarioFileError."""
    yaml = YAML()  # round-trip loader keeps line numbers
    try:
        with path.open(encoding="utf-8") as f:
            return yaml.load(f)
    except OSError as e:
        raise ScenarioFileError(f"Cannot read file: {e}", path) from e
    except UnicodeDecodeError as e:
        raise ScenarioFileError(f"File is not UTF-8: {e.reason}", path) from e
    except MarkedYAMLError as e:
        line = e.problem_mark.line + 1 if e.problem_mark is not None else None
        raise ScenarioFileError(f"Invalid YAML: {e.problem}", path, line=line) from e


def _line_of(document: Any, loc: Sequence[int | str]) -> int | None:
    """1-based line of the deepest node of ``loc`` present in the document."""
    node = document
    line: int | None = None
    for part in loc:
        lc = getattr(node, "lc", None)
        if isinstance(node, dict) and part in node:
            if lc is not None:
                line = lc.key(part)[0] + 1
            node = node[part]
        elif isinstance(node, list) and isinstance(part, int) and 0 <= part < len(node):
            if lc is not None:
                line = lc.item(part)[0] + 1
            node = node[part]
        else:
            break
    if line is None and getattr(document, "lc", None) is not None:
        line = document.lc.line + 1
    return line


def _file_error(path: Path, document: Any, error: ValidationError) -> ScenarioFileError:
    first = error.errors()[0]
    loc = first["loc"]
    field = ".".join(str(part) for part in loc) or None
    return ScenarioFileError(first["msg"], path, line=_line_of(document, loc), field=field)


def load_scenario(path: Path) -> ScenarioConfig:
    """Parse and validate a scenario file.

    Raises ScenarioFileError naming the line and field of the first problem.
    """
    document = _load_document(path)
    if not isinstance(document, dict):
        raise ScenarioFileError("A scenario must be a mapping", path, line=1)
    try:
        scenario = ScenarioConfig.model_validate(document)
    except ValidationError as e:
        raise _file_error(path, document, e) from e
    logger.info(f"Loaded scenario {scenario.name} from {path} ({len(scenario.groups)} groups)")
    return scenario


def load_relations(path: Path) -> list[TemporalRelation]:
    """Parse a list of temporal relations, bare or under a ``relations`` key.

    Each relation is either ``{commands: [[actuator, command], ...]}`` or the
    list of pairs itself.

    Raises ScenarioFileError.
    """
    document = _load_document(path)
    entries = document.get("relations") if isinstance(document, dict) else document
    if not isinstance(entries, list):
        raise ScenarioFileError("Expected a list of relations", path, line=1, field="relations")
    normalized = [{"commands": e} if isinstance(e, list) else e for e in entries]
    try:
        relations = _RELATIONS.validate_python(normalized)
    except ValidationError as e:
        raise _file_error(path, entries, e) from e
    logger.info(f"Loaded {len(relations)} temporal relations from {path}")
    return relations


def write_scenario(scenario: ScenarioConfig, path: Path) -> Path:
    """Write a scenario as one JSON document that ``load_scenario`` reads back."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(scenario.model_dump_json(indent=2) + "\n", encoding="utf-8")
    logger.info(f"Wrote scenario {scenario.name} to {path}")
    return path
