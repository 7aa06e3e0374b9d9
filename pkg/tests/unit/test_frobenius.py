"""
Unit tests for indicial roots and logarithm detection at the origin.
"""

from fractions import Fraction

import pytest

from src.adapters.parsers import parse_operator
from src.domain.entities import Polynomial
from src.domain.exceptions import IrregularSingularPoint, UnsupportedOrder, ValidationError
from src.domain.services.frobenius import local_logs_at_zero
from src.domain.services.ore import reduce_op_mod_p
from src.domain.value_objects import QQ

from ..conftest import DIAG3, LEGENDRE


@pytest.mark.unit
class TestLocalLogs:
    """Frobenius analysis of regular singular points."""

    @pytest.mark.parametrize("text", [DIAG3, LEGENDRE])
    def test_repeated_root_forces_logs(self, text):
        report = local_logs_at_zero(parse_operator(text))
        assert report.logs_present
        assert not report.ordinary
        assert report.indicial_polynomial == Polynomial(QQ, [0, 0, 1])
        assert report.rational_roots == (Fraction(0),)

    def test_ordinary_point(self, exp_operator):
        report = local_logs_at_zero(exp_operator)
        assert report.ordinary
        assert not report.logs_present
        assert report.exponents[0].leading_terms[:3] == (1, 1, Fraction(1, 2))

    def test_resonance_without_logs(self):
        report = local_logs_at_zero(parse_operator("x^2*Dx^2 - 2"), slack=4)
        assert report.rational_roots == (Fraction(-1), Fraction(2))
        assert not report.logs_present
        assert all(e.log_free for e in report.exponents)
        assert report.order_examined == 7

    def test_resonance_with_logs(self):
        report = local_logs_at_zero(parse_operator("x^2*Dx^2 + x*Dx + x^2 - 1"))
        assert report.logs_present
        by_root = {e.root: e.log_free for e in report.exponents}
        assert by_root == {Fraction(-1): False, Fraction(1): True}

    def test_irrational_roots(self):
        report = local_logs_at_zero(parse_operator("x^2*Dx^2 + x*Dx - 2"))
        assert report.rational_roots == ()
        assert report.irrational_factors == (Polynomial(QQ, [-2, 0, 1]),)
        assert not report.logs_present

    def test_irregular_singularity(self):
        with pytest.raises(IrregularSingularPoint):
            local_logs_at_zero(parse_operator("x^2*Dx - 1"))

    def test_order_limit(self):
        with pytest.raises(UnsupportedOrder):
            local_logs_at_zero(parse_operator("Dx^5 + 1"))

    def test_needs_rationals(self, catalan):
        with pytest.raises(ValidationError):
            local_logs_at_zero(reduce_op_mod_p(catalan, 5))
