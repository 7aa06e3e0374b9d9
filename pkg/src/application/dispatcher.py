"""Command dispatcher: routes a CommandRequest to its use case."""

from typing import Dict, Optional, Type

from ..adapters.catalog_loaders import YamlOperatorCatalog
from ..domain.exceptions import UnknownCommand
from ..infrastructure.cache import ParseCache
from ..infrastructure.config import Settings, get_settings
from .dtos import CommandReport, CommandRequest
from .services import ExpressionService
from .use_cases import (
    AlgebraicSeriesUseCase,
    CartierUseCase,
    CatalogUseCase,
    CommandUseCase,
    ConfigUseCase,
    DiagonalUseCase,
    DivideUseCase,
    EisensteinUseCase,
    FundamentalMatrixUseCase,
    HypergeomUseCase,
    IntegralityUseCase,
    KroneckerUseCase,
    LocalLogsUseCase,
    Order1UseCase,
    PCurvatureUseCase,
    RelationUseCase,
    ScanUseCase,
    SeriesUseCase,
)

USE_CASES: Dict[str, Type[CommandUseCase]] = {
    use_case.name: use_case
    for use_case in (
        DivideUseCase,
        PCurvatureUseCase,
        CartierUseCase,
        ScanUseCase,
        Order1UseCase,
        HypergeomUseCase,
        EisensteinUseCase,
        IntegralityUseCase,
        LocalLogsUseCase,
        SeriesUseCase,
        DiagonalUseCase,
        KroneckerUseCase,
        RelationUseCase,
        AlgebraicSeriesUseCase,
        FundamentalMatrixUseCase,
        CatalogUseCase,
        ConfigUseCase,
    )
}


def build_expression_service(settings: Settings) -> ExpressionService:
    catalog = YamlOperatorCatalog(settings.catalog.catalog_dir) if settings.catalog.enabled else None
    return ExpressionService(catalog, ParseCache(settings.cache.max_size))


class CommandDispatcher:
    """Holds the shared expression service and instantiates use cases on demand."""

    def __init__(
        self,
        settings: Optional[Settings] = None,
        expressions: Optional[ExpressionService] = None
    ) -> None:
        self.settings = settings or get_settings()
        self.expressions = expressions or build_expression_service(self.settings)

    @property
    def commands(self) -> list[str]:
        return sorted(USE_CASES)

    def dispatch(self, request: CommandRequest) -> CommandReport:
        """
        Run the use case for ``request.command``.

        Raises:
            UnknownCommand: no use case has that name
        """
        use_case = USE_CASES.get(request.command)
        if use_case is None:
            raise UnknownCommand(request.command, USE_CASES)
        return use_case(self.expressions, self.settings).execute(request)
