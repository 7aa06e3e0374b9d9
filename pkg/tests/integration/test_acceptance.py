"""
End-to-end checks against published values: remainders of Dx^p, prime
scans, order-1 criteria in both characteristics, hypergeometric series
and integrality of the Zagier sequence.
"""

from fractions import Fraction
from math import factorial

import pytest

from src.adapters.parsers import (
    parse_multivariate_fraction,
    parse_operator,
    parse_polynomial,
    parse_rational_function,
)
from src.domain.entities import (
    DiffOp,
    HypergeomClass,
    PCurvatureStatus,
    Polynomial,
    PRecurrence,
    RationalFunction,
)
from src.domain.exceptions import Reducible
from src.domain.services.criteria import (
    good_primes,
    grothendieck_scan,
    hypergeom_classify,
    kronecker_scan,
    order1_char0_classify,
    order1_charp_has_rational,
    p_integrality_check,
)
from src.domain.services.frobenius import local_logs_at_zero
from src.domain.services.ore import apply_op, dx_power_remainders, reduce_op_mod_p, right_divmod
from src.domain.services.pcurvature import cartier_test, pcurvature_recurrence
from src.domain.services.series_lab import (
    diagonal_small,
    hypergeom_series,
    recurrence_unroll,
    rescaled_terms,
)
from src.domain.value_objects import GF, HypergeomParams, PrimeRange

from ..conftest import DIAG3, EXP, EXP_ARCTAN, L2R, LEGENDRE, LOG

PRIMES_TO_43 = PrimeRange(2, 43).primes()

ALGEBRAIC_CORPUS = [
    "1/(2*x)",
    "1/(3*(x-1))",
    "2/x - 1/(x-1)",
    "1/(2*x) + 1/(3*(x+1))",
    "-5/(7*(x-2))",
    "3/(4*x) - 1/(4*(x-1))",
    "1/(2*(x-1)) + 1/(2*(x+1))",
    "2*x/(3*x^2-6)",
    "1/(5*x) + 2/(5*(x-3))",
    "1/(x*(x^2+1))",
]

TRANSCENDENTAL_CORPUS = [
    "1",
    "1/x^2",
    "x/(x+1)",
    "1/(x^2+1)",
    "1/(x^2-2)",
    "1/x + 1/x^2",
    "x",
    "1/(x^2+x+1)",
    "1/(x^2-3)",
    "1/(x^2+2)",
]


def zagier_recurrence():
    """Zagier's c_n recurrence, shifted so u(k) = c_k and n = k + 3."""
    n = Polynomial.x() + 3
    p0 = Polynomial.constant(n.field, 1)
    p1 = 20 * (4500 * n * n - 18900 * n + 19739)
    p2 = 25 * (
        2592000 * n * n * n * n
        - 16588800 * n * n * n
        + 39118320 * n * n
        - 39189168 * n
        + 14092603
    )
    p3 = 80352000 * n * (5 * n - 1) * (5 * n - 2) * (5 * n - 4)
    return PRecurrence((p0, p1, p2, p3), offset=-2, initial_values=(1,))


@pytest.mark.integration
class TestRemainders:
    """Remainders of Dx^p for the classical operators."""

    @pytest.mark.parametrize("p", PrimeRange(2, 31).primes())
    def test_log_remainder(self, p):
        op = reduce_op_mod_p(parse_operator(LOG), p)
        x = RationalFunction.x(GF(p))
        expected = DiffOp(GF(p), [0, -1 / (1 - x) ** (p - 1)])
        assert dx_power_remainders(op, p)[p] == expected

    @pytest.mark.parametrize("p", PrimeRange(2, 50).primes())
    def test_exp_remainder(self, p):
        op = reduce_op_mod_p(parse_operator(EXP), p)
        assert dx_power_remainders(op, p)[p] == DiffOp(GF(p), [1])

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
    def test_catalan_divides(self, catalan, p):
        op = reduce_op_mod_p(catalan, p)
        _, remainder = right_divmod(DiffOp.dx(GF(p), p), op)
        assert remainder.is_zero()

    @pytest.mark.parametrize("p", [p for p in PRIMES_TO_43 if p % 4 == 3])
    def test_l2r_printed_remainder(self, p):
        op = reduce_op_mod_p(parse_operator(L2R), p)
        x = RationalFunction.x(GF(p))
        h = (p - 1) // 2
        expected = DiffOp(GF(p), [-1 / ((x - 1) ** (h + 1) * x**h), -2 / (x * (x - 1)) ** h])
        assert dx_power_remainders(op, p)[p] == expected


@pytest.mark.integration
class TestPrimeScans:
    """Zero p-curvature patterns across primes."""

    def test_l2r_one_mod_four(self):
        report = grothendieck_scan(parse_operator(L2R), PRIMES_TO_43)
        for p in PRIMES_TO_43[1:]:
            assert (report.status_of(p) is PCurvatureStatus.ZERO) == (p % 4 == 1), p

    def test_exp_arctan(self):
        report = grothendieck_scan(parse_operator(EXP_ARCTAN), PRIMES_TO_43)
        zero = [p for p in PRIMES_TO_43 if report.status_of(p) is PCurvatureStatus.ZERO]
        assert zero == [p for p in PRIMES_TO_43 if p % 4 == 1]


    @pytest.mark.parametrize("p", PRIMES_TO_43)
    def test_exp_arctan_constants(self, p):
        c = 1 if p == 2 else (0 if p % 4 == 1 else 2)
        x = RationalFunction.x(GF(p))
        matrix = pcurvature_recurrence(reduce_op_mod_p(parse_operator(EXP_ARCTAN), p))
        assert matrix.entry(0, 0) == -c / (x * x + 1) ** p

    def test_kronecker_square_root_of_two(self):
        report = kronecker_scan(parse_polynomial("x^2 - 2"), PrimeRange(2, 60).primes())
        assert report.excluded_primes == [2]
        assert report.split_primes == [p for p in PrimeRange(3, 60).primes() if p % 8 in (1, 7)]
        assert report.split_primes[:4] == [7, 17, 23, 31]
    def test_cubic_splitting_primes(self, catalog):
        op = parse_operator(catalog.get("x3_minus_x_minus_1").operator)
        report = grothendieck_scan(op, PrimeRange(2, 319).primes())
        zero = [e.prime for e in report.entries if e.status is PCurvatureStatus.ZERO]
        assert zero == [3, 59, 101, 167, 173, 211, 223, 271, 307, 317]
        cubic = parse_polynomial("x^3 - x - 1")
        kronecker = kronecker_scan(cubic, PrimeRange(5, 319).primes())
        assert kronecker.split_primes == zero[1:]

    def test_cubic_at_three_has_rational_solution_without_splitting(self, catalog):
        # f' = 3x^2 - 1 = -1 mod 3, so 1/f = -f'/f and f^2 solves y' = y/f
        op = reduce_op_mod_p(parse_operator(catalog.get("x3_minus_x_minus_1").operator), 3)
        report = cartier_test(op)
        assert report.status is PCurvatureStatus.ZERO
        assert report.polynomial_basis
        for solution in report.polynomial_basis:
            assert apply_op(op, RationalFunction(solution)).is_zero()
        f = parse_polynomial("x^3 - x - 1").reduce_mod(3)
        assert report.polynomial_basis == (f * f,)
        assert kronecker_scan(parse_polynomial("x^3 - x - 1"), [3]).entries[0].splits is False

    @pytest.mark.slow
    def test_zagier_operator(self, catalog):
        op = parse_operator(catalog.get("zagier_l4").operator)
        report = grothendieck_scan(op, PrimeRange(7, 97).primes())
        assert report.exception_primes == [7, 31]

    @pytest.mark.slow
    def test_trident_operator_has_exceptions(self, catalog):
        op = parse_operator(catalog.get("trident_l5").operator)
        report = grothendieck_scan(op, PrimeRange(2, 50).primes())
        assert report.exception_primes


@pytest.mark.integration
class TestOrder1Corpus:
    """Characteristic 0 verdicts agree with every good reduction."""

    @pytest.mark.parametrize("text", ALGEBRAIC_CORPUS + TRANSCENDENTAL_CORPUS)
    def test_char0_matches_reductions(self, text):
        a = parse_rational_function(text)
        primes = good_primes([a], PrimeRange(2, 50).primes())
        assert primes
        verdict = order1_char0_classify(a)
        reductions = [order1_charp_has_rational(-a.reduce_mod(p)) for p in primes]
        assert verdict.has_algebraic_solution == all(reductions)
        assert verdict.has_algebraic_solution == (text in ALGEBRAIC_CORPUS)


@pytest.mark.integration
class TestHypergeometricCases:
    """Interlacing verdicts."""

    @pytest.mark.parametrize("upper", ["1/2,1/2", "1/3,2/3"])
    def test_transcendental(self, upper):
        assert hypergeom_classify(HypergeomParams.parse(upper, "1")).classification is HypergeomClass.TRANSCENDENTAL

    def test_reducible(self):
        with pytest.raises(Reducible):
            hypergeom_classify(HypergeomParams.parse("1/2,1/3", "3/2"))

    def test_diagonal_matches_hypergeometric_series(self):
        numerator, denominator = parse_multivariate_fraction("1/(1-x-y-z)", ("x", "y", "z"))
        diagonal = diagonal_small(numerator, denominator, 7).python_coefficients()
        hypergeometric = hypergeom_series(HypergeomParams.parse("1/3,2/3", "1"), 7, 27)
        assert diagonal == hypergeometric.python_coefficients()
        assert diagonal == [factorial(3 * n) // factorial(n) ** 3 for n in range(7)]

    def test_christol_series(self):
        params = HypergeomParams.parse("1/9,4/9,5/9", "1,1/3")
        series = hypergeom_series(params, 5, 3**6)
        assert series.python_coefficients() == [1, 60, 20475, 9373650, 4881796920]
        assert hypergeom_classify(params).classification is HypergeomClass.TRANSCENDENTAL


@pytest.mark.integration
class TestIntegrality:
    """Denominators of series coefficients."""

    def test_zagier_initial_terms(self):
        c = recurrence_unroll(zagier_recurrence(), 3).python_coefficients()
        assert c[0] == 1
        assert c[1] == Fraction(-161, 2**10 * 3**5)
        assert c[2] == Fraction(26605753, 2**23 * 3**12 * 5**2)

    def test_yang_zagier_integrality(self):
        c = recurrence_unroll(zagier_recurrence(), 101).python_coefficients()
        scaled = rescaled_terms(c, 2**10 * 3**5 * 5**4, [Fraction(3, 5), Fraction(4, 5)])
        assert all(Fraction(a).denominator == 1 for a in scaled)

    def test_unscaled_sequence_is_not_integral(self):
        c = recurrence_unroll(zagier_recurrence(), 10).python_coefficients()
        assert any(Fraction(v).denominator != 1 for v in c)

    @pytest.mark.parametrize("p,integral", [(5, True), (13, True), (17, True), (3, False), (7, False), (11, False)])
    def test_exp_arctan(self, p, integral):
        assert p_integrality_check(parse_operator(EXP_ARCTAN), [1], p, 200).passed is integral

    def test_local_logs(self):
        assert local_logs_at_zero(parse_operator(DIAG3)).logs_present
        assert local_logs_at_zero(parse_operator(LEGENDRE)).logs_present

    def test_factorial_growth_of_exp(self):
        op = parse_operator(EXP)
        result = p_integrality_check(op, [1], 5, 30)
        assert not result.passed
        assert result.first_failure == 5
