"""Domain entities for pcurv."""

from .polynomial import Polynomial, format_polynomial
from .rational_function import RationalFunction
from .operator import DiffOp
from .series import HurwitzSeries, TruncatedSeries
from .recurrence import PRecurrence
from .multivariate import BivariatePolynomial, MultivariatePolynomial
from .reports import (
    Char0RelationsReport,
    EisensteinResult,
    ExponentReport,
    FactorDiagnostic,
    HypergeomClass,
    HypergeomVerdict,
    IntegralityResult,
    InterlacingCertificate,
    KroneckerEntry,
    KroneckerReport,
    LocalLogsReport,
    Order1Verdict,
    PCurvatureMatrix,
    PCurvatureMethod,
    PCurvatureReport,
    PCurvatureStatus,
    ScanEntry,
    ScanReport,
    SeriesCongruenceResult,
)

__all__ = [
    "Polynomial",
    "format_polynomial",
    "RationalFunction",
    "DiffOp",
    "HurwitzSeries",
    "TruncatedSeries",
    "PRecurrence",
    "BivariatePolynomial",
    "MultivariatePolynomial",
    "Char0RelationsReport",
    "EisensteinResult",
    "ExponentReport",
    "FactorDiagnostic",
    "HypergeomClass",
    "HypergeomVerdict",
    "IntegralityResult",
    "InterlacingCertificate",
    "KroneckerEntry",
    "KroneckerReport",
    "LocalLogsReport",
    "Order1Verdict",
    "PCurvatureMatrix",
    "PCurvatureMethod",
    "PCurvatureReport",
    "PCurvatureStatus",
    "ScanEntry",
    "ScanReport",
    "SeriesCongruenceResult",
]
