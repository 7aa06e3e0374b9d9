"""
Pytest configuration and fixtures for pcurv tests.
"""

from pathlib import Path

import pytest
from click.testing import CliRunner

from src.adapters.catalog_loaders import YamlOperatorCatalog
from src.adapters.parsers import parse_operator
from src.application.dispatcher import CommandDispatcher
from src.application.services import ExpressionService
from src.domain.entities import DiffOp
from src.infrastructure.cache import ParseCache
from src.infrastructure.config import Settings
from src.infrastructure.logging import correlation_id

PROJECT_ROOT = Path(__file__).parent.parent
OPERATORS_DIR = PROJECT_ROOT / "operators"

CATALAN = "(4*x^2-x)*Dx^2 + (10*x-2)*Dx + 2"
LOG = "(1-x)*Dx^2 - Dx"
EXP = "Dx - 1"
L2R = "2*x*(x-1)*Dx^2 + (4*x-1)*Dx + 1"
EULER = "(x-x^3)*Dx^2 + (1-x^2)*Dx + x"
LEGENDRE = "(4*x^2-4*x)*Dx^2 + (8*x-4)*Dx + 1"
EXP_ARCTAN = "Dx - 1/(x^2+1)"
DIAG3 = "x*(27*x-1)*Dx^2 + (54*x-1)*Dx + 6"


@pytest.fixture
def catalan() -> DiffOp:
    return parse_operator(CATALAN)


@pytest.fixture
def log_operator() -> DiffOp:
    return parse_operator(LOG)


@pytest.fixture
def exp_operator() -> DiffOp:
    return parse_operator(EXP)


@pytest.fixture
def l2r() -> DiffOp:
    return parse_operator(L2R)


@pytest.fixture
def exp_arctan() -> DiffOp:
    return parse_operator(EXP_ARCTAN)


@pytest.fixture
def operators_dir() -> Path:
    return OPERATORS_DIR


@pytest.fixture
def catalog() -> YamlOperatorCatalog:
    """Catalog backed by the shipped operator files."""
    return YamlOperatorCatalog(OPERATORS_DIR)


@pytest.fixture
def settings() -> Settings:
    """Settings isolated from any .env file."""
    return Settings(_env_file=None)


@pytest.fixture
def expressions(catalog: YamlOperatorCatalog) -> ExpressionService:
    return ExpressionService(catalog, ParseCache(32))


@pytest.fixture
def dispatcher(settings: Settings, expressions: ExpressionService) -> CommandDispatcher:
    return CommandDispatcher(settings, expressions)


@pytest.fixture
def runner() -> CliRunner:
    """Create CLI test runner."""
    return CliRunner()


@pytest.fixture(autouse=True)
def clear_correlation_id():
    """CLI invocations tag the shared context; start and end each test untagged."""
    token = correlation_id.set(None)
    yield
    correlation_id.reset(token)
