"""
Unit tests for polynomial, rational-function, operator, series and
recurrence entities.
"""

from fractions import Fraction

import pytest

from src.domain.entities import (
    BivariatePolynomial,
    DiffOp,
    HurwitzSeries,
    MultivariatePolynomial,
    Polynomial,
    PRecurrence,
    RationalFunction,
    TruncatedSeries,
)
from src.domain.exceptions import BadReduction, PoleAtOrigin, PoleEvaluation, ValidationError
from src.domain.value_objects import GF, QQ


def poly(*coefficients, field=QQ):
    return Polynomial(field, coefficients)


@pytest.mark.unit
class TestPolynomial:
    """Test cases for univariate polynomials."""

    def test_degree_and_zero(self):
        assert poly(1, 2, 3).degree == 2
        assert Polynomial(QQ).degree == -1
        assert Polynomial(QQ).is_zero()

    def test_arithmetic(self):
        x = Polynomial.x()
        assert (x + 1) * (x - 1) == poly(-1, 0, 1)
        assert (x + 1) ** 3 == poly(1, 3, 3, 1)
        assert 2 - x == poly(2, -1)

    def test_divmod(self):
        q, r = divmod(poly(1, 0, 1), poly(1, 1))
        assert q == poly(-1, 1)
        assert r == poly(2)

    def test_exact_div_rejects_remainder(self):
        with pytest.raises(ValueError):
            poly(1, 0, 1).exact_div(poly(1, 1))

    def test_gcd_is_monic(self):
        g = poly(-2, 0, 2).gcd(poly(2, 2))
        assert g == poly(1, 1)

    def test_xgcd_and_invmod(self):
        a, m = poly(1, 1), poly(1, 0, 1)
        g, s, t = a.xgcd(m)
        assert g == 1
        assert s * a + t * m == g
        assert (a * a.invmod(m)) % m == 1

    def test_powmod_frobenius(self):
        x = Polynomial.x(GF(5))
        modulus = poly(1, 0, 1, field=GF(5))
        assert x.powmod(5, modulus) == x % modulus

    def test_taylor_shift_and_evaluate(self):
        f = poly(1, 2, 1)
        assert f.taylor_shift(-1) == poly(0, 0, 1)
        assert f.evaluate(2) == 9

    def test_compose_power(self):
        assert poly(1, 2).compose_power(3) == poly(1, 0, 0, 2)

    def test_reduce_mod(self):
        reduced = poly(Fraction(1, 2), 7).reduce_mod(5)
        assert reduced.field == GF(5)
        assert reduced.python_coefficients() == [3, 2]

    def test_reduce_mod_bad_denominator(self):
        with pytest.raises(BadReduction):
            poly(Fraction(1, 5)).reduce_mod(5)

    def test_str(self):
        assert str(poly(-1, 0, 4)) == "4*x^2 - 1"
        assert str(poly(0, Fraction(-1, 2))) == "-1/2*x"
        assert str(Polynomial(QQ)) == "0"


@pytest.mark.unit
class TestRationalFunction:
    """Test cases for rational functions."""

    def test_normalized_form(self):
        f = RationalFunction(poly(2, 2), poly(-2, 0, 2))
        assert f.numerator == poly(1)
        assert f.denominator == poly(-1, 1)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            RationalFunction(poly(1), Polynomial(QQ))

    def test_arithmetic(self):
        x = RationalFunction.x(QQ)
        f = 1 / (x + 1)
        g = 1 / (x - 1)
        assert f + g == RationalFunction(poly(0, 2), poly(-1, 0, 1))
        assert f * (x + 1) == 1
        assert (f / g) == RationalFunction(poly(-1, 1), poly(1, 1))

    def test_derivative(self):
        x = RationalFunction.x(QQ)
        assert (1 / x).derivative() == -1 / (x * x)
        assert (x ** 3).nth_derivative(3) == 6

    def test_evaluate_pole(self):
        x = RationalFunction.x(QQ)
        with pytest.raises(PoleEvaluation):
            (1 / x).evaluate(0)

    def test_frobenius_subfield(self):
        field = GF(3)
        x = RationalFunction.x(field)
        assert (x ** 3 + 1).in_frobenius_subfield()
        assert not (x ** 2).in_frobenius_subfield()
        assert (1 / (x ** 6 + 2)).in_frobenius_subfield()

    def test_reduce_mod_scales_to_integers(self):
        x = RationalFunction.x(QQ)
        reduced = (x / 2).reduce_mod(5)
        assert reduced == RationalFunction(poly(0, 3, field=GF(5)))

    def test_reduce_mod_vanishing_denominator(self):
        f = RationalFunction(poly(1), poly(5))
        assert f == Fraction(1, 5)
        with pytest.raises(BadReduction):
            f.reduce_mod(5)

    def test_str(self):
        x = RationalFunction.x(QQ)
        assert str((x + 1) / (x * x - 1)) == "1/(x - 1)"


@pytest.mark.unit
class TestDiffOp:
    """Test cases for differential operators."""

    def test_order_and_trailing_zeros(self):
        op = DiffOp(QQ, [1, 2, 0, 0])
        assert op.order == 1
        assert DiffOp(QQ).order == -1
        assert DiffOp.dx(QQ, 3).order == 3

    def test_common_denominator_and_polynomial_coefficients(self):
        x = RationalFunction.x(QQ)
        op = DiffOp(QQ, [1 / x, 1 / (x - 1), 1])
        assert op.common_denominator() == poly(0, -1, 1)
        assert op.polynomial_coefficients() == [poly(-1, 1), poly(0, 1), poly(0, -1, 1)]

    def test_left_scale(self):
        op = DiffOp(QQ, [1, 1]).left_scale(2)
        assert op == DiffOp(QQ, [2, 2])

    def test_payload_round_trip(self):
        x = RationalFunction.x(GF(7))
        op = DiffOp(GF(7), [1 / (x + 3), x ** 2, 1])
        assert DiffOp.from_payload(op.to_payload()) == op

    def test_str(self):
        x = RationalFunction.x(QQ)
        op = DiffOp(QQ, [2, 10 * x - 2, 4 * x * x - x])
        assert str(op) == "(4*x^2 - x)*Dx^2 + (10*x - 2)*Dx + 2"
        assert str(DiffOp.dx(QQ)) == "Dx"


@pytest.mark.unit
class TestTruncatedSeries:
    """Test cases for truncated power series."""

    def test_geometric_series(self):
        x = RationalFunction.x(QQ)
        series = TruncatedSeries.from_rational_function(1 / (1 - x), 5)
        assert series.python_coefficients() == [1, 1, 1, 1, 1]

    def test_pole_at_origin(self):
        x = RationalFunction.x(QQ)
        with pytest.raises(PoleAtOrigin):
            TruncatedSeries.from_rational_function(1 / x, 3)

    def test_inverse(self):
        s = TruncatedSeries.from_coefficients(QQ, [1, 1], 6)
        assert s.inverse().python_coefficients() == [1, -1, 1, -1, 1, -1]

    def test_product_truncates_to_smaller_order(self):
        a = TruncatedSeries.from_coefficients(QQ, [1, 1, 1])
        b = TruncatedSeries.from_coefficients(QQ, [1, 1])
        assert (a * b).order == 2

    def test_compose(self):
        outer = TruncatedSeries.from_coefficients(QQ, [1, 1, 1, 1])
        inner = TruncatedSeries.from_coefficients(QQ, [0, 2, 0, 0])
        assert outer.compose(inner).python_coefficients() == [1, 2, 4, 8]

    def test_evaluate_polynomial_at(self):
        s = TruncatedSeries.from_coefficients(QQ, [1, 1, 0, 0])
        # y^2 - 1
        value = s.evaluate_polynomial_at([poly(-1), Polynomial(QQ), poly(1)])
        assert value.python_coefficients() == [0, 2, 1, 0]

    def test_padding(self):
        s = TruncatedSeries.from_coefficients(QQ, [1], 4)
        assert s.python_coefficients() == [1, 0, 0, 0]
        with pytest.raises(IndexError):
            s[4]


@pytest.mark.unit
class TestHurwitzSeries:
    """Divided-power series over GF(p)."""

    def test_gamma_product(self):
        g1 = HurwitzSeries.gamma(5, 1, 5)
        assert (g1 * g1).coefficients == (0, 0, 2, 0, 0)

    def test_derivative_shifts(self):
        g3 = HurwitzSeries.gamma(5, 3, 5)
        assert g3.derivative().coefficients == (0, 0, 1, 0)

    def test_power_series_conversion(self):
        s = TruncatedSeries.from_coefficients(GF(5), [1, 1, 1, 1, 1])
        h = HurwitzSeries.from_power_series(s)
        assert h.coefficients == (1, 1, 2, 1, 4)
        assert h.to_power_series() == s


@pytest.mark.unit
class TestPRecurrence:
    """Polynomial-coefficient recurrences."""

    def test_from_lists(self):
        rec = PRecurrence.from_lists([[-2, -4], [2, 1]], initial_values=[1])
        assert rec.order == 1
        assert rec.leading == poly(2, 1)
        assert rec.initial_values == (Fraction(1),)

    def test_zero_leading_rejected(self):
        with pytest.raises(ValidationError):
            PRecurrence.from_lists([[1], []])

    def test_singular_indices(self):
        rec = PRecurrence.from_lists([[1], [-3, 1]])
        assert rec.singular_indices(5) == [3]

    def test_str(self):
        rec = PRecurrence.from_lists([[-2, -4], [2, 1]])
        assert str(rec) == "(-4*k - 2)*u(k) + (k + 2)*u(k+1) = 0"


@pytest.mark.unit
class TestMultivariate:
    """Sparse multivariate and bivariate polynomials."""

    def test_arithmetic(self):
        x = MultivariatePolynomial.variable(2, 0)
        y = MultivariatePolynomial.variable(2, 1)
        one = MultivariatePolynomial.constant(2, 1)
        p = (one - x - y) ** 2
        assert p.constant_term() == 1
        assert p.terms[(1, 1)] == 2
        assert p.degree_in(0) == 2
        assert p.uses_variable(1)

    def test_bivariate_from_multivariate(self):
        x = MultivariatePolynomial.variable(2, 0)
        y = MultivariatePolynomial.variable(2, 1)
        one = MultivariatePolynomial.constant(2, 1)
        # x*y^2 - y + 1
        bivariate = BivariatePolynomial.from_multivariate(x * y * y - y + one)
        assert bivariate.degree_y == 2
        assert bivariate.coefficients[2] == poly(0, 1)
        assert bivariate.evaluate_at_origin(1) == 0
        assert bivariate.derivative_y().evaluate_at_origin(1) == -1

    def test_bivariate_reduce_mod(self):
        bivariate = BivariatePolynomial(QQ, [poly(-1), Polynomial(QQ), poly(1, 1)])
        reduced = bivariate.reduce_mod(5)
        assert reduced.field == GF(5)
        assert reduced.coefficients[0] == poly(4, field=GF(5))
        assert str(bivariate) == "(x + 1)*y^2 + (-1)"
