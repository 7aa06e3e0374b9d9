"""Use cases for the algebraicity and integrality criteria."""

from typing import Any, Dict, List, Tuple

from ...domain.exceptions import BadReduction
from ...domain.services import (
    eisenstein_check,
    hypergeom_classify,
    kronecker_scan,
    local_logs_at_zero,
    order1_char0_classify,
    order1_charp_has_rational,
    p_integrality_check,
    series_solve,
)
from ...domain.value_objects import HypergeomParams
from ..dtos import CommandRequest
from .base import CommandUseCase


class Order1UseCase(CommandUseCase):
    """Rational and algebraic solutions of ``y' = a y``, in characteristic 0 and per prime."""

    name = "order1"

    def run(self, request: CommandRequest) -> Tuple[Any, str]:
        a = self.expressions.rational_function(request.require("a"))
        verdict = order1_char0_classify(a)
        per_prime: List[Dict[str, Any]] = []
        if request.get("pmin") is not None or request.get("pmax") is not None:
            primes = self.expressions.prime_range(
                request.get("pmin", self.settings.scan.pmin),
                request.get("pmax", self.settings.scan.pmax),
            )
            for p in primes:
                try:
                    b = (-a).reduce_mod(p)
                except BadReduction as e:
                    per_prime.append({"prime": p, "has_rational_solution": None, "reason": e.message})
                    continue
                per_prime.append({"prime": p, "has_rational_solution": order1_charp_has_rational(b)})
        result = {"char0": verdict, "primes": per_prime}
        kind = (
            "rational" if verdict.has_rational_solution
            else "algebraic" if verdict.has_algebraic_solution
            else "transcendental"
        )
        return result, f"solutions of y' = ({a}) y are {kind}"


class HypergeomUseCase(CommandUseCase):
    """Interlacing classification of a hypergeometric series."""

    name = "hypergeom"

    def run(self, request: CommandRequest) -> Tuple[Any, str]:
        params = HypergeomParams.parse(request.require("upper"), request.get("lower", ""))
        verdict = hypergeom_classify(params)
        return verdict, f"F({params}) is {verdict.classification.value}"


class EisensteinUseCase(CommandUseCase):
    """Globally bounded test on a coefficient prefix."""

    name = "eisenstein"

    def run(self, request: CommandRequest) -> Tuple[Any, str]:
        if request.get("coefficients"):
            coefficients = self.expressions.rationals(request.get("coefficients"), "coefficients")
        else:
            op = self.expressions.operator(request.require("op"))
            initial = self.expressions.rationals(request.require("initial"), "initial")
            terms = self.expressions.positive(
                request.get("terms", self.settings.series.default_terms), "terms"
            )
            coefficients = [c for c in series_solve(op, initial, terms).python_coefficients()]
        bound = request.get("bound", self.settings.series.eisenstein_bound)
        result = eisenstein_check(coefficients, bound)
        if result.passed:
            summary = f"passes with N = {result.scale} on {result.terms_examined} terms (heuristic)"
        else:
            summary = f"fails: N exceeds {bound}; primes {list(result.witness_primes)}"
        return result, summary


class IntegralityUseCase(CommandUseCase):
    """p-integrality of a series solution up to a truncation order."""

    name = "integrality"

    def run(self, request: CommandRequest) -> Tuple[Any, str]:
        op = self.expressions.operator(request.require("op"))
        initial = self.expressions.rationals(request.require("initial"), "initial")
        p = self.expressions.prime(request.require("prime"))
        terms = self.expressions.positive(
            request.get("terms", self.settings.series.integrality_terms), "terms"
        )
        result = p_integrality_check(op, initial, p, terms)
        if result.passed:
            summary = f"p = {p}: p-integral up to index {terms - 1}"
        else:
            summary = (
                f"p = {p}: coefficient {result.first_failure} has valuation "
                f"{result.failing_valuation}"
            )
        return result, summary


class LocalLogsUseCase(CommandUseCase):
    """Frobenius analysis at the origin."""

    name = "locallogs"

    def run(self, request: CommandRequest) -> Tuple[Any, str]:
        op = self.expressions.operator(request.require("op"))
        slack = request.get("slack", self.settings.series.log_order_slack)
        report = local_logs_at_zero(op, slack)
        state = "present" if report.logs_present else "absent"
        return report, f"logarithms at 0 {state}; indicial polynomial {report.indicial_polynomial}"


class KroneckerUseCase(CommandUseCase):
    """Primes where a polynomial splits into distinct linear factors."""

    name = "kronecker"

    def run(self, request: CommandRequest) -> Tuple[Any, str]:
        poly = self.expressions.polynomial(request.require("poly"))
        primes = self.expressions.prime_range(
            request.get("pmin", self.settings.scan.pmin),
            request.get("pmax", self.settings.scan.pmax),
        )
        report = kronecker_scan(poly, primes)
        return report, f"splits completely modulo {report.split_primes}"
