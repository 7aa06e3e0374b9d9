"""
JSON rendering of command reports.

Exact integers become decimal strings, rationals ``"n/d"``, rational
functions ``{"num", "den"}``. Field order is fixed so reports for the same
input are byte-identical.
"""

from __future__ import annotations

import dataclasses
import json
from enum import Enum
from fractions import Fraction
from functools import singledispatch
from pathlib import Path
from typing import Any, Dict

import flint

from ..domain.entities import (
    BivariatePolynomial,
    DiffOp,
    KroneckerReport,
    PCurvatureMatrix,
    Polynomial,
    PRecurrence,
    RationalFunction,
    ScanReport,
    TruncatedSeries,
)
from ..domain.services.arithmetic import as_fraction
from .dtos import CommandReport


@singledispatch
def to_jsonable(value: Any) -> Any:
    """Convert a domain value to JSON-ready data."""
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: to_jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)}
    raise TypeError(f"Cannot serialize {type(value).__name__}")


@to_jsonable.register(type(None))
def _none(value: None) -> None:
    return None


@to_jsonable.register(bool)
def _bool(value: bool) -> bool:
    return value


@to_jsonable.register(str)
def _str(value: str) -> str:
    if isinstance(value, Enum):
        return str(value.value)
    return value


@to_jsonable.register(float)
def _float(value: float) -> float:
    return value


@to_jsonable.register(int)
def _int(value: int) -> str:
    return str(value)


@to_jsonable.register(Fraction)
def _fraction(value: Fraction) -> str:
    return str(value)


@to_jsonable.register(flint.fmpz)
@to_jsonable.register(flint.fmpq)
def _flint_rational(value: Any) -> str:
    return str(as_fraction(value))


@to_jsonable.register(flint.nmod)
def _nmod(value: Any) -> str:
    return str(int(value))


@to_jsonable.register(Enum)
def _enum(value: Enum) -> Any:
    return value.value


@to_jsonable.register(Path)
def _path(value: Path) -> str:
    return str(value)


@to_jsonable.register(list)
@to_jsonable.register(tuple)
def _sequence(value: Any) -> list:
    return [to_jsonable(v) for v in value]


@to_jsonable.register(dict)
def _mapping(value: Dict[Any, Any]) -> Dict[str, Any]:
    return {str(k): to_jsonable(v) for k, v in value.items()}


@to_jsonable.register(Polynomial)
def _polynomial(value: Polynomial) -> Dict[str, Any]:
    return {
        "coefficients": [str(c) for c in value.python_coefficients()],
        "text": str(value),
    }


@to_jsonable.register(RationalFunction)
def _rational_function(value: RationalFunction) -> Dict[str, str]:
    return {"num": str(value.numerator), "den": str(value.denominator)}


@to_jsonable.register(DiffOp)
def _operator(value: DiffOp) -> Dict[str, Any]:
    return {
        "field": str(value.field),
        "order": str(value.order),
        "coefficients": [to_jsonable(c) for c in value.coefficients],
        "text": str(value),
    }


@to_jsonable.register(TruncatedSeries)
def _series(value: TruncatedSeries) -> Dict[str, Any]:
    return {
        "field": str(value.field),
        "order": str(value.order),
        "coefficients": [str(c) for c in value.python_coefficients()],
    }


@to_jsonable.register(PRecurrence)
def _recurrence(value: PRecurrence) -> Dict[str, Any]:
    return {
        "offset": str(value.offset),
        "coefficients": [to_jsonable(c) for c in value.coefficients],
        "initial_values": [str(v) for v in value.initial_values],
        "text": str(value),
    }


@to_jsonable.register(BivariatePolynomial)
def _bivariate(value: BivariatePolynomial) -> str:
    return str(value)


@to_jsonable.register(PCurvatureMatrix)
def _pcurvature_matrix(value: PCurvatureMatrix) -> Dict[str, Any]:
    return {
        "prime": str(value.prime),
        "method": value.method.value,
        "is_zero": value.is_zero(),
        "entries": [[to_jsonable(e) for e in row] for row in value.entries],
    }


@to_jsonable.register(ScanReport)
def _scan_report(value: ScanReport) -> Dict[str, Any]:
    return {
        "operator": value.operator,
        "heuristic": value.heuristic,
        "counts": {k: str(v) for k, v in value.counts.items()},
        "exception_primes": to_jsonable(value.exception_primes),
        "bad_reduction_primes": to_jsonable(value.bad_reduction_primes),
        "entries": to_jsonable(value.entries),
    }


@to_jsonable.register(KroneckerReport)
def _kronecker_report(value: KroneckerReport) -> Dict[str, Any]:
    return {
        "polynomial": to_jsonable(value.polynomial),
        "split_primes": to_jsonable(value.split_primes),
        "excluded_primes": to_jsonable(value.excluded_primes),
        "entries": to_jsonable(value.entries),
    }


def report_to_dict(report: CommandReport, include_timing: bool = False) -> Dict[str, Any]:
    """Ordered ``{command, arguments, status, result[, error][, timing_ms]}``."""
    data: Dict[str, Any] = {
        "command": report.command,
        "arguments": to_jsonable(report.arguments),
        "status": report.status.value,
        "result": to_jsonable(report.result),
    }
    if report.error is not None:
        data["error"] = to_jsonable(report.error.to_dict())
    if include_timing:
        data["timing_ms"] = round(report.timing_ms, 3)
    return data


def render_json(report: CommandReport, include_timing: bool = False) -> str:
    return json.dumps(
        report_to_dict(report, include_timing), sort_keys=False, ensure_ascii=False, indent=2
    ) + "\n"


def write_report(report: CommandReport, path: Path, include_timing: bool = False) -> None:
    Path(path).write_text(render_json(report, include_timing), encoding="utf-8")
