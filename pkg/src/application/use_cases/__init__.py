"""Use cases for pcurv: one per command."""

from .base import CommandUseCase
from .catalog_commands import CatalogUseCase, ConfigUseCase
from .criteria_commands import (
    EisensteinUseCase,
    HypergeomUseCase,
    IntegralityUseCase,
    KroneckerUseCase,
    LocalLogsUseCase,
    Order1UseCase,
)
from .operator_commands import (
    CartierUseCase,
    DivideUseCase,
    FundamentalMatrixUseCase,
    PCurvatureUseCase,
)
from .scan_prime_range import ScanUseCase, scan_one
from .series_commands import (
    AlgebraicSeriesUseCase,
    DiagonalUseCase,
    RelationUseCase,
    SeriesUseCase,
)

__all__ = [
    "CommandUseCase",
    "DivideUseCase",
    "PCurvatureUseCase",
    "CartierUseCase",
    "FundamentalMatrixUseCase",
    "ScanUseCase",
    "scan_one",
    "Order1UseCase",
    "HypergeomUseCase",
    "EisensteinUseCase",
    "IntegralityUseCase",
    "LocalLogsUseCase",
    "KroneckerUseCase",
    "SeriesUseCase",
    "DiagonalUseCase",
    "RelationUseCase",
    "AlgebraicSeriesUseCase",
    "CatalogUseCase",
    "ConfigUseCase",
]
