"""Use cases for the series laboratory."""

from typing import Any, Dict, Tuple

from ...domain.entities import TruncatedSeries
from ...domain.services import (
    algebraic_series_mod_p,
    check_algebraic_relation,
    diagonal_small,
    is_ordinary_at_zero,
    operator_to_recurrence,
    recurrence_unroll,
    reduce_op_mod_p,
    series_solve,
)
from ...domain.services.series_lab import rescaled_terms
from ...domain.value_objects import QQ
from ..dtos import CommandRequest
from .base import CommandUseCase


class SeriesUseCase(CommandUseCase):
    """
    Series solution at 0, optionally with its recurrence or modulo a prime.

    With ``recurrence`` set, or when 0 is a singular point, the coefficients
    come from unrolling the coefficient recurrence and ``initial`` holds the
    first coefficients. Otherwise ``initial`` holds ``y(0), ..., y^(n-1)(0)``.
    """

    name = "series"

    def run(self, request: CommandRequest) -> Tuple[Any, str]:
        op = self.expressions.operator(request.require("op"))
        initial = self.expressions.rationals(request.require("initial"), "initial")
        terms = self.expressions.positive(
            request.get("terms", self.settings.series.default_terms), "terms"
        )
        prime = request.get("prime")
        p = self.expressions.prime(prime) if prime is not None else None
        result: Dict[str, Any] = {}
        if request.get("recurrence") or not is_ordinary_at_zero(op):
            rec = operator_to_recurrence(op).with_initial_values(initial)
            result["recurrence"] = rec
            series = recurrence_unroll(rec, terms)
            if p is not None:
                series = series.reduce_mod(p)
        else:
            if p is not None:
                op = reduce_op_mod_p(op, p)
            series = series_solve(op, initial, terms)
        result["series"] = series
        if request.get("rescale") is not None:
            base = self.expressions.rationals(str(request.get("rescale")), "rescale")[0]
            params = self.expressions.rationals(request.get("params", ""), "params")
            result["rescaled"] = rescaled_terms(series.python_coefficients(), base, params)
        return result, str(series)


class DiagonalUseCase(CommandUseCase):
    """Diagonal of a rational function in two or three variables."""

    name = "diagonal"

    def run(self, request: CommandRequest) -> Tuple[Any, str]:
        (numerator, denominator), nvars = self.expressions.diagonal_input(request.require("rational"))
        terms = self.expressions.positive(
            request.get("terms", self.settings.series.default_terms), "terms"
        )
        series = diagonal_small(numerator, denominator, terms)
        return {"variables": nvars, "series": series}, str(series)


class RelationUseCase(CommandUseCase):
    """Check ``P(x, y(x)) = 0`` modulo ``x^T`` for a computed or given series."""

    name = "relation"

    def _series(self, request: CommandRequest, terms: int) -> TruncatedSeries:
        if request.get("coefficients"):
            values = self.expressions.rationals(request.get("coefficients"), "coefficients")
            return TruncatedSeries.from_coefficients(QQ, values, len(values))
        op = self.expressions.operator(request.require("op"))
        initial = self.expressions.rationals(request.require("initial"), "initial")
        return series_solve(op, initial, terms)

    def run(self, request: CommandRequest) -> Tuple[Any, str]:
        poly = self.expressions.bivariate(request.require("poly"))
        terms = self.expressions.positive(
            request.get("terms", self.settings.series.default_terms), "terms"
        )
        series = self._series(request, terms)
        prime = request.get("prime")
        if prime is not None:
            series = series.reduce_mod(self.expressions.prime(prime))
        holds = check_algebraic_relation(series, poly, terms)
        result = {"polynomial": poly, "terms": terms, "holds": holds}
        return result, f"P(x, y(x)) {'=' if holds else '!='} 0 mod x^{terms}"


class AlgebraicSeriesUseCase(CommandUseCase):
    """Root of ``P(x, y)`` through ``(0, y0)`` modulo a prime, by Newton iteration."""

    name = "algebraic"

    def run(self, request: CommandRequest) -> Tuple[Any, str]:
        poly = self.expressions.bivariate(request.require("poly"))
        p = self.expressions.prime(request.require("prime"))
        y0 = int(request.get("y0", 0))
        terms = self.expressions.positive(
            request.get("terms", self.settings.series.default_terms), "terms"
        )
        series = algebraic_series_mod_p(poly.reduce_mod(p), y0, terms)
        return {"prime": p, "y0": y0, "series": series}, str(series)
