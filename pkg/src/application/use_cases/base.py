"""Common machinery for command use cases."""

import time
from abc import ABC, abstractmethod
from typing import Any, ClassVar, Tuple

from ...domain.exceptions import DomainException, handle_exception
from ...infrastructure.config import Settings, get_settings
from ...infrastructure.logging import get_logger
from ..dtos import CommandReport, CommandRequest
from ..services import ExpressionService


class CommandUseCase(ABC):
    """
    One CLI command.

    Subclasses implement ``run`` and return ``(result, summary)``; errors
    become failure reports carrying the domain exception.
    """

    name: ClassVar[str]

    def __init__(
        self,
        expressions: ExpressionService,
        settings: Settings | None = None
    ) -> None:
        self.expressions = expressions
        self.settings = settings or get_settings()
        self.logger = get_logger(__name__).bind(command=self.name)

    @abstractmethod
    def run(self, request: CommandRequest) -> Tuple[Any, str]:
        """Compute the result payload and a one-line summary."""

    def execute(self, request: CommandRequest) -> CommandReport:
        start_time = time.perf_counter()
        try:
            request.validate()
            result, summary = self.run(request)
        except DomainException as e:
            report = CommandReport.failure(request, e, self._elapsed(start_time))
        except Exception as e:  # noqa: BLE001
            self.logger.exception("Unexpected failure", error=str(e))
            report = CommandReport.failure(
                request, handle_exception(e, context=self.name), self._elapsed(start_time)
            )
        else:
            report = CommandReport.success(request, result, self._elapsed(start_time), summary)
        self.logger.command_completed(
            command=self.name, status=report.status.value, duration_ms=report.timing_ms
        )
        return report

    @staticmethod
    def _elapsed(start_time: float) -> float:
        return (time.perf_counter() - start_time) * 1000
