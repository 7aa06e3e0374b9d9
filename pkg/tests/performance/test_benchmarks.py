"""
Performance benchmarks for pcurv.
"""

import pytest

from src.adapters.parsers import parse_operator
from src.domain.entities import PCurvatureStatus
from src.domain.services.criteria import grothendieck_scan
from src.domain.services.ore import reduce_op_mod_p
from src.domain.services.pcurvature import (
    pcurvature_local_series_crt,
    pcurvature_recurrence,
    pcurvature_via_remainders,
)
from src.domain.value_objects import PrimeRange
from src.infrastructure.cache import ParseCache

from ..conftest import CATALAN, L2R


@pytest.fixture
def zagier(catalog):
    return parse_operator(catalog.get("zagier_l4").operator)


@pytest.mark.benchmark
class TestPCurvatureBenchmarks:
    """Single-prime p-curvature timings."""

    @pytest.mark.parametrize(
        "algorithm",
        [pcurvature_recurrence, pcurvature_via_remainders, pcurvature_local_series_crt],
        ids=["recurrence", "remainders", "crt"],
    )
    def test_l2r_at_101(self, benchmark, algorithm):
        op = reduce_op_mod_p(parse_operator(L2R), 101)
        matrix = benchmark(algorithm, op)
        assert matrix.is_zero()

    def test_parse_cache_hit(self, benchmark):
        cache = ParseCache(8)
        cache.get_or_parse("operator", CATALAN, parse_operator)
        op = benchmark(cache.get_or_parse, "operator", CATALAN, parse_operator)
        assert op.order == 2


@pytest.mark.slow
@pytest.mark.benchmark
class TestScanBenchmarks:
    """Prime-range scans."""

    def test_zagier_scan(self, benchmark, zagier):
        report = benchmark.pedantic(
            grothendieck_scan, args=(zagier, PrimeRange(7, 97).primes()), rounds=1, iterations=1
        )
        assert report.exception_primes == [7, 31]

    def test_zagier_single_prime(self, benchmark, zagier):
        op = reduce_op_mod_p(zagier, 97)
        matrix = benchmark.pedantic(pcurvature_recurrence, args=(op,), rounds=1, iterations=1)
        assert matrix.is_zero()
        assert grothendieck_scan(zagier, [97]).status_of(97) is PCurvatureStatus.ZERO
