"""Custom exceptions for reading and writing scenario, trace and report files."""

from pathlib import Path


class PersistenceError(Exception):
    """Base exception for file (de)serialization errors."""

    def __init__(self, message: str, context: dict[str, str] | None = None) -> None:
        self.message = message
        self.context = context or {}
        super().__init__(message)

    def __str__(self) -> str:
        if self.context:
            context_str = ", ".join(f"{k}={v}" for k, v in self.context.items())
            return f"{self.message} (context: {context_str})"
        return self.message


class ScenarioFileError(PersistenceError):
    """Raised when a scenario or relations file is malformed."""

    def __init__(
        self, message: str, path: Path, line: int | None = None, field: str | None = None
    ) -> None:
        self.path = path
        self.line = line
        self.field = field
        context = {"path": str(path)}
        if line is not None:
            context["line"] = str(line)
        if field is not None:
            context["field"] = field
        super().__init__(message, context)


class TraceFileError(PersistenceError):
    """Raised when a trace file is empty, truncated or of an unknown schema."""
