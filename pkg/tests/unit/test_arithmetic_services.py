"""
Unit tests for the arithmetic and matrix services.
"""

from fractions import Fraction

import pytest

from src.domain.entities import Polynomial, RationalFunction
from src.domain.exceptions import BadReduction, InseparableInput, ValidationError
from src.domain.services.arithmetic import (
    crt_polynomials,
    factorial_valuation,
    integer_prime_factors,
    is_squarefree,
    nonlinear_factors,
    p_valuation,
    poly_gcd,
    polynomial_from_roots,
    ratfun_arith,
    rational_roots,
    reduce_mod_p,
    squarefree_decomposition,
)
from src.domain.services.matrices import (
    hessenberg_charpoly,
    mat_mul,
    nullspace_mod_p,
    polynomial_matrix_rank,
    wronskian_rows,
)
from src.domain.value_objects import GF, QQ


def poly(*coefficients, field=QQ):
    return Polynomial(field, coefficients)


def constant_matrix(rows):
    return [[RationalFunction.constant(QQ, v) for v in row] for row in rows]


@pytest.mark.unit
class TestSquarefree:
    """Squarefree tests and Yun decomposition."""

    def test_is_squarefree(self):
        assert is_squarefree(poly(-1, 0, 1))
        assert not is_squarefree(poly(1, 2, 1))

    def test_decomposition(self):
        f = poly(-1, 1) * poly(1, 1) ** 2
        assert squarefree_decomposition(f) == [(poly(-1, 1), 1), (poly(1, 1), 2)]

    def test_decomposition_keeps_leading_coefficient_out(self):
        f = poly(0, 0, 3)
        assert squarefree_decomposition(f) == [(poly(0, 1), 2)]

    def test_inseparable(self):
        with pytest.raises(InseparableInput):
            squarefree_decomposition(poly(3, 0, 0, 0, 0, 1, field=GF(5)))

    def test_zero_rejected(self):
        with pytest.raises(ValidationError):
            squarefree_decomposition(Polynomial(QQ))


@pytest.mark.unit
class TestGcdAndReduction:
    """Monic gcd and reduction of rational functions mod p."""

    def test_gcd_is_monic(self):
        assert poly_gcd(poly(-4, 2, 2), poly(3, -4, 1)) == poly(-1, 1)

    def test_gcd_mod_p(self):
        a = poly(-1, 0, 1, field=GF(5))
        b = poly(4, 0, 1, field=GF(5))
        assert poly_gcd(a, b) == a

    def test_reduce_scales_denominators(self):
        half_x = RationalFunction(poly(0, Fraction(1, 2)))
        assert reduce_mod_p(half_x, 5) == RationalFunction(poly(0, 3, field=GF(5)))

    def test_reduce_vanishing_denominator(self):
        with pytest.raises(BadReduction):
            reduce_mod_p(RationalFunction(poly(1), poly(5, 5)), 5)


@pytest.mark.unit
class TestArithmeticHelpers:
    """Valuations, factorization and CRT."""

    def test_crt(self):
        x = Polynomial.x()
        result = crt_polynomials([poly(1), poly(2)], [x, x - 1])
        assert result == poly(1, 1)

    def test_crt_mismatched_lists(self):
        with pytest.raises(ValidationError):
            crt_polynomials([poly(1)], [])

    def test_p_valuation(self):
        assert p_valuation(Fraction(9, 2), 3) == 2
        assert p_valuation(Fraction(1, 12), 2) == -2
        assert p_valuation(0, 7) is None

    def test_factorial_valuation(self):
        assert factorial_valuation(10, 2) == 8
        assert factorial_valuation(4, 5) == 0

    def test_integer_prime_factors(self):
        assert integer_prime_factors(360) == [(2, 3), (3, 2), (5, 1)]
        assert integer_prime_factors(1) == []

    def test_roots_and_factors(self):
        f = poly(-1, 2) * poly(3, 1) * poly(1, 0, 1)
        assert rational_roots(f) == [Fraction(-3), Fraction(1, 2)]
        assert nonlinear_factors(f) == [poly(1, 0, 1)]

    def test_polynomial_from_roots(self):
        assert polynomial_from_roots([1, 2]) == poly(2, -3, 1)

    def test_ratfun_arith(self):
        x = RationalFunction.x(QQ)
        assert ratfun_arith("add", x, 1) == x + 1
        assert ratfun_arith("derivative", x * x) == 2 * x
        assert QQ.to_python(ratfun_arith("eval", 1 / (x + 1), 1)) == Fraction(1, 2)
        with pytest.raises(ValidationError):
            ratfun_arith("sqrt", x)


@pytest.mark.unit
class TestMatrices:
    """Characteristic polynomials and ranks."""

    def test_charpoly_2x2(self):
        charpoly = hessenberg_charpoly(constant_matrix([[1, 2], [3, 4]]))
        assert charpoly == [-2, -5, 1]

    def test_charpoly_needs_reduction(self):
        charpoly = hessenberg_charpoly(constant_matrix([[2, 1, 1], [1, 2, 1], [1, 1, 2]]))
        assert charpoly == [-4, 9, -6, 1]

    def test_charpoly_with_zero_subdiagonal(self):
        charpoly = hessenberg_charpoly(constant_matrix([[1, 5, 7], [0, 2, 3], [0, 0, 3]]))
        assert charpoly == [-6, 11, -6, 1]

    def test_charpoly_rational_entries(self):
        x = RationalFunction.x(QQ)
        one = RationalFunction.one(QQ)
        zero = RationalFunction.zero(QQ)
        charpoly = hessenberg_charpoly([[zero, one], [x, zero]])
        assert charpoly == [-x, zero, one]

    def test_mat_mul(self):
        a = constant_matrix([[1, 1], [0, 1]])
        assert mat_mul(a, a) == constant_matrix([[1, 2], [0, 1]])

    def test_wronskian_rank(self):
        x = Polynomial.x()
        assert polynomial_matrix_rank(wronskian_rows([poly(1), x, x * x])) == 3

    def test_wronskian_rank_in_characteristic_two(self):
        x = Polynomial.x(GF(2))
        one = Polynomial(GF(2), [1])
        assert polynomial_matrix_rank(wronskian_rows([one, x * x])) == 1

    def test_nullspace_mod_p(self):
        assert nullspace_mod_p([[1, 1]], 2, 2) == [[1, 1]]
        assert nullspace_mod_p([], 2, 3) == [[1, 0], [0, 1]]
