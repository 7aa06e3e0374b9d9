"""Application layer DTOs."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

from ..domain.exceptions import DomainException, ValidationError


class CommandStatus(Enum):
    """Command outcome."""

    OK = "ok"
    ERROR = "error"


@dataclass
class CommandRequest:
    """A command name with its arguments, in the order the user gave them."""

    command: str
    arguments: Dict[str, Any] = field(default_factory=dict)

    def validate(self) -> None:
        """Validate request."""
        if not self.command:
            raise ValidationError("Command name is required", field="command")

    def get(self, key: str, default: Any = None) -> Any:
        value = self.arguments.get(key)
        return default if value is None else value

    def require(self, key: str) -> Any:
        value = self.arguments.get(key)
        if value is None or value == "":
            raise ValidationError(f"Missing required argument --{key}", field=key)
        return value


@dataclass
class CommandReport:
    """Structured outcome of one command."""

    command: str
    arguments: Dict[str, Any]
    status: CommandStatus
    result: Any = None
    error: Optional[DomainException] = None
    timing_ms: float = 0.0
    summary: str = ""

    @classmethod
    def success(
        cls,
        request: CommandRequest,
        result: Any,
        timing_ms: float = 0.0,
        summary: str = "",
    ) -> CommandReport:
        """Create success report."""
        return cls(
            command=request.command,
            arguments=dict(request.arguments),
            status=CommandStatus.OK,
            result=result,
            timing_ms=timing_ms,
            summary=summary,
        )

    @classmethod
    def failure(
        cls,
        request: CommandRequest,
        error: DomainException,
        timing_ms: float = 0.0,
    ) -> CommandReport:
        """Create failure report."""
        return cls(
            command=request.command,
            arguments=dict(request.arguments),
            status=CommandStatus.ERROR,
            error=error,
            timing_ms=timing_ms,
            summary=error.message,
        )

    @property
    def ok(self) -> bool:
        return self.status is CommandStatus.OK

    @property
    def exit_code(self) -> int:
        if self.error is None:
            return 0
        return self.error.exit_code
