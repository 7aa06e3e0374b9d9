"""
Unit tests for Ore-ring arithmetic: products, right division, remainders
of powers of Dx and reduction modulo p.
"""

import pytest

from src.adapters.parsers import parse_operator, parse_rational_function
from src.domain.entities import DiffOp, RationalFunction, TruncatedSeries
from src.domain.exceptions import BadReduction, DivisionByZeroOperator, ValidationError
from src.domain.services.ore import (
    apply_op,
    dx_power_remainders,
    monicize,
    ore_mul,
    reduce_op_mod_p,
    right_divmod,
)
from src.domain.value_objects import GF, QQ

from ..conftest import CATALAN, L2R

CATALAN_REMAINDERS = {
    2: ("-2*(5*x-1)/(x*(4*x-1))", "-2/(x*(4*x-1))"),
    3: ("6*(22*x^2-9*x+1)/(x^2*(4*x-1)^2)", "6*(6*x-1)/(x^2*(4*x-1)^2)"),
    5: (
        "120*(386*x^4-325*x^3+110*x^2-17*x+1)/(x^4*(4*x-1)^4)",
        "120*(130*x^3-69*x^2+14*x-1)/(x^4*(4*x-1)^4)",
    ),
}


@pytest.mark.unit
class TestOreMultiplication:
    """Twisted multiplication Dx * r = r * Dx + r'."""

    def test_commutation_rule(self):
        x = RationalFunction.x(QQ)
        product = ore_mul(DiffOp.dx(QQ), DiffOp(QQ, [x]))
        assert product == DiffOp(QQ, [1, x])

    def test_dx_powers_commute(self):
        assert ore_mul(DiffOp.dx(QQ, 2), DiffOp.dx(QQ, 3)) == DiffOp.dx(QQ, 5)

    def test_binomial_coefficients_reduce_mod_p(self):
        x = RationalFunction.x(GF(3))
        # Dx^3 * x = x*Dx^3 + 3*Dx^2 = x*Dx^3 over GF(3)
        product = ore_mul(DiffOp.dx(GF(3), 3), DiffOp(GF(3), [x]))
        assert product == DiffOp(GF(3), [0, 0, 0, x])

    def test_zero_factor(self):
        assert ore_mul(DiffOp(QQ), DiffOp.dx(QQ)).is_zero()

    def test_field_mismatch(self):
        with pytest.raises(ValidationError) as exc_info:
            ore_mul(DiffOp.dx(QQ), DiffOp.dx(GF(5)))
        assert exc_info.value.exit_code == 2


@pytest.mark.unit
class TestRightDivision:
    """A = Q * B + R with order(R) < order(B)."""

    @pytest.mark.parametrize(
        "dividend,divisor",
        [
            ("Dx^5", CATALAN),
            ("x^2*Dx^3 + Dx - 1", "(x+1)*Dx - 2"),
            ("Dx^4 + 1/x", L2R),
        ],
    )
    def test_reconstruction(self, dividend, divisor):
        a, b = parse_operator(dividend), parse_operator(divisor)
        q, r = right_divmod(a, b)
        assert r.order < b.order
        assert ore_mul(q, b) + r == a

    def test_lower_order_dividend(self):
        a, b = parse_operator("x*Dx"), parse_operator(CATALAN)
        q, r = right_divmod(a, b)
        assert q.is_zero()
        assert r == a

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZeroOperator):
            right_divmod(DiffOp.dx(QQ), DiffOp(QQ))

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_catalan_printed_remainders(self, catalan, p):
        numerator, constant = CATALAN_REMAINDERS[p]
        expected = DiffOp(
            QQ, [parse_rational_function(constant), parse_rational_function(numerator)]
        )
        _, r = right_divmod(DiffOp.dx(QQ, p), catalan)
        assert r == expected
        assert all(c.reduce_mod(p).is_zero() for c in r.coefficients)

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_catalan_remainder_after_reduction(self, catalan, p):
        reduced = reduce_op_mod_p(catalan, p)
        _, r = right_divmod(DiffOp.dx(GF(p), p), reduced)
        assert r.is_zero()


@pytest.mark.unit
class TestDxPowerRemainders:
    """Incremental remainders of Dx^k."""

    def test_matches_division(self, l2r):
        remainders = dx_power_remainders(l2r, 6)
        for k, remainder in enumerate(remainders):
            assert remainder == right_divmod(DiffOp.dx(QQ, k), l2r)[1]

    def test_exp_remainder_is_one(self, exp_operator):
        for p in (2, 3, 5, 7):
            reduced = reduce_op_mod_p(exp_operator, p)
            assert dx_power_remainders(reduced, p)[p] == DiffOp(GF(p), [1])

    def test_order_zero_divisor(self):
        remainders = dx_power_remainders(DiffOp(QQ, [3]), 2)
        assert all(r.is_zero() for r in remainders)


@pytest.mark.unit
class TestApplyAndReduce:
    """Operator application, monic form and reduction modulo p."""

    def test_catalan_annihilates_catalan_series(self, catalan):
        series = TruncatedSeries.from_coefficients(QQ, [1, 1, 2, 5, 14, 42, 132, 429])
        assert apply_op(catalan, series).is_zero()

    def test_apply_to_rational_function(self):
        x = RationalFunction.x(QQ)
        op = parse_operator("x*Dx - 2")
        assert apply_op(op, x * x).is_zero()
        assert apply_op(op, x) == -x

    def test_monicize(self, catalan):
        monic = monicize(catalan)
        assert monic.is_monic()
        assert monic.coefficient(0) == parse_rational_function("2/(4*x^2-x)")

    def test_reduce_leading_vanishes(self):
        with pytest.raises(BadReduction) as exc_info:
            reduce_op_mod_p(parse_operator("5*x*Dx^2 + Dx"), 5)
        assert exc_info.value.leading_degenerate

    def test_reduce_coefficient_not_reducible(self):
        with pytest.raises(BadReduction) as exc_info:
            reduce_op_mod_p(parse_operator("Dx - 1/5"), 5)
        assert exc_info.value.coefficient_index == 0

    def test_reduce_keeps_shape(self, catalan):
        reduced = reduce_op_mod_p(catalan, 3)
        assert reduced.field == GF(3)
        assert reduced.order == 2

    def test_reduce_twice_is_rejected(self, catalan):
        with pytest.raises(ValidationError) as exc_info:
            reduce_op_mod_p(reduce_op_mod_p(catalan, 5), 5)
        assert exc_info.value.details["field"] == "op"
        assert exc_info.value.exit_code == 2
