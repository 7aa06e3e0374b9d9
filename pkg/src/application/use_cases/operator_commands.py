"""Use cases on a single operator at one prime: division, p-curvature, Cartier test."""

from typing import Any, Dict, Tuple

from ...domain.entities import PCurvatureMethod, PCurvatureStatus
from ...domain.exceptions import ValidationError
from ...domain.services import (
    cartier_test,
    compute_pcurvature,
    fundamental_matrix_at,
    reduce_op_mod_p,
    right_divmod,
)
from ...domain.services.pcurvature import pcurvature_charpoly
from ..dtos import CommandRequest
from .base import CommandUseCase

METHODS = {
    "recurrence": PCurvatureMethod.RECURRENCE,
    "remainders": PCurvatureMethod.REMAINDERS,
    "crt": PCurvatureMethod.LOCAL_SERIES_CRT,
    "closed-form": PCurvatureMethod.CLOSED_FORM,
}


class DivideUseCase(CommandUseCase):
    """Right Euclidean division ``num = Q * den + R``, optionally modulo a prime."""

    name = "divide"

    def run(self, request: CommandRequest) -> Tuple[Any, str]:
        num = self.expressions.operator(request.require("num"))
        den = self.expressions.operator(request.require("den"))
        prime = request.get("prime")
        if prime is not None:
            p = self.expressions.prime(prime)
            num, den = reduce_op_mod_p(num, p), reduce_op_mod_p(den, p)
        quotient, remainder = right_divmod(num, den)
        result = {
            "field": str(num.field),
            "quotient": quotient,
            "remainder": remainder,
            "remainder_is_zero": remainder.is_zero(),
        }
        return result, f"remainder = {remainder}"


class PCurvatureUseCase(CommandUseCase):
    """p-curvature matrix by the selected algorithm, with its characteristic polynomial."""

    name = "pcurvature"

    def run(self, request: CommandRequest) -> Tuple[Any, str]:
        op = self.expressions.operator(request.require("op"))
        p = self.expressions.prime(request.require("prime"))
        method_name = request.get("method", self.settings.pcurvature.default_method)
        if method_name not in METHODS:
            raise ValidationError(
                f"Unknown method {method_name}; choose from {', '.join(METHODS)}",
                field="method", value=method_name,
            )
        points_text = request.get("points", self.settings.pcurvature.crt_points)
        points = self.expressions.integers(points_text, "points") if points_text else None
        matrix = compute_pcurvature(reduce_op_mod_p(op, p), METHODS[method_name], points)
        charpoly = pcurvature_charpoly(matrix)
        result: Dict[str, Any] = {
            "matrix": matrix,
            "charpoly": charpoly,
            "charpoly_in_frobenius_subfield": all(c.in_frobenius_subfield() for c in charpoly),
        }
        state = "zero" if matrix.is_zero() else "nonzero"
        return result, f"p-curvature at p = {p} is {state} ({matrix.method.value})"


class CartierUseCase(CommandUseCase):
    """Zero-test of the p-curvature with a polynomial-basis or remainder witness."""

    name = "cartier"

    def run(self, request: CommandRequest) -> Tuple[Any, str]:
        op = self.expressions.operator(request.require("op"))
        p = self.expressions.prime(request.require("prime"))
        report = cartier_test(reduce_op_mod_p(op, p), with_witness=True)
        if report.status is PCurvatureStatus.ZERO:
            summary = (
                f"p = {p}: p-curvature zero; {len(report.polynomial_basis)} polynomial "
                f"solutions of degree < {report.degree_bound}"
            )
        else:
            summary = f"p = {p}: p-curvature {report.status.value}; remainder of Dx^{p} is nonzero"
        return report, summary


class FundamentalMatrixUseCase(CommandUseCase):
    """Polynomial fundamental matrix around a base point when the p-curvature vanishes."""

    name = "fundamental"

    def run(self, request: CommandRequest) -> Tuple[Any, str]:
        op = self.expressions.operator(request.require("op"))
        p = self.expressions.prime(request.require("prime"))
        a = int(request.get("point", 0))
        matrix = fundamental_matrix_at(reduce_op_mod_p(op, p), a)
        result = {"prime": p, "point": a, "matrix": matrix}
        return result, f"fundamental matrix around x = {a} modulo {p}"
