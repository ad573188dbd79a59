"""Custom exceptions for misordering analysis."""


class AnalysisError(Exception):
    """Base exception for all trace analysis errors."""

    def __init__(self, message: str, context: dict[str, str] | None = None) -> None:
        self.message = message
        self.context = context or {}
        super().__init__(message)

    def __str__(self) -> str:
        if self.context:
            context_str = ", ".join(f"{k}={v}" for k, v in self.context.items())
            return f"{self.message} (context: {context_str})"
        return self.message


class IncompleteMessageError(AnalysisError):
    """Raised when a message without an actuator arrival time reaches a detector."""

    def __init__(self, msg_id: int) -> None:
        super().__init__(
            f"Message {msg_id} has no arrival time at its actuator",
            context={"msg_id": str(msg_id)},
        )
        self.msg_id = msg_id


class UndefinedRateError(AnalysisError):
    """Raised when a rate is requested for an entity with no arrivals."""


class EmptyTraceError(AnalysisError):
    """Raised when analysis is started on a trace without messages or events."""
