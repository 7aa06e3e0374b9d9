"""Result types returned by the p-curvature, criteria and series services."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .operator import DiffOp
from .polynomial import Polynomial
from .rational_function import RationalFunction


Matrix = Tuple[Tuple[RationalFunction, ...], ...]


class PCurvatureMethod(str, Enum):
    """Algorithm that produced a p-curvature matrix."""

    RECURRENCE = "recurrence"
    REMAINDERS = "remainders"
    LOCAL_SERIES_CRT = "local-series-crt"
    CLOSED_FORM = "closed-form"


class PCurvatureStatus(str, Enum):
    """Per-prime verdict."""

    ZERO = "zero"
    NILPOTENT_NONZERO = "nilpotent-nonzero"
    NONZERO = "nonzero"
    BAD_REDUCTION = "bad-reduction"


@dataclass(frozen=True)
class PCurvatureMatrix:
    """Matrix of the p-th power of the connection, entries in GF(p)(x)."""

    prime: int
    entries: Matrix
    method: PCurvatureMethod = field(default=PCurvatureMethod.RECURRENCE, compare=False)

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def entry(self, i: int, j: int) -> RationalFunction:
        return self.entries[i][j]


@dataclass(frozen=True)
class PCurvatureReport:
    """Cartier-lemma verdict at one prime, with its witness."""

    prime: int
    status: PCurvatureStatus
    charpoly: Tuple[RationalFunction, ...] = ()
    matrix: Optional[PCurvatureMatrix] = None
    polynomial_basis: Tuple[Polynomial, ...] = ()
    remainder: Optional[DiffOp] = None
    degree_bound: Optional[int] = None
    reason: Optional[str] = None

    @property
    def has_witness(self) -> bool:
        return bool(self.polynomial_basis) or self.remainder is not None


@dataclass(frozen=True)
class ScanEntry:
    prime: int
    status: PCurvatureStatus
    reason: Optional[str] = None


@dataclass(frozen=True)
class ScanReport:
    """Grothendieck-heuristic scan over a prime range."""

    operator: str
    entries: Tuple[ScanEntry, ...]
    heuristic: bool = True

    @property
    def primes(self) -> List[int]:
        return [e.prime for e in self.entries]

    @property
    def counts(self) -> Dict[str, int]:
        tally = Counter(e.status.value for e in self.entries)
        return {s.value: tally.get(s.value, 0) for s in PCurvatureStatus}

    @property
    def exception_primes(self) -> List[int]:
        """Good primes whose p-curvature does not vanish."""
        return [
            e.prime for e in self.entries
            if e.status in (PCurvatureStatus.NONZERO, PCurvatureStatus.NILPOTENT_NONZERO)
        ]

    @property
    def bad_reduction_primes(self) -> List[int]:
        return [e.prime for e in self.entries if e.status is PCurvatureStatus.BAD_REDUCTION]

    def status_of(self, prime: int) -> PCurvatureStatus:
        for e in self.entries:
            if e.prime == prime:
                return e.status
        raise KeyError(prime)


@dataclass(frozen=True)
class FactorDiagnostic:
    """Residue analysis of one squarefree factor of the denominator."""

    factor: Polynomial
    multiplicity: int
    residue_constant: bool
    residues: Tuple[Fraction, ...] = ()
    integral: bool = False


@dataclass(frozen=True)
class Order1Verdict:
    has_rational_solution: bool
    has_algebraic_solution: bool
    vanishes_at_infinity: bool
    diagnostics: Tuple[FactorDiagnostic, ...] = ()


class HypergeomClass(str, Enum):
    ALGEBRAIC = "algebraic"
    TRANSCENDENTAL = "transcendental"


@dataclass(frozen=True)
class InterlacingCertificate:
    """Joint sorted pattern for one multiplier ``ell`` (U upper, L lower)."""

    ell: int
    pattern: str
    interlaces: bool


@dataclass(frozen=True)
class HypergeomVerdict:
    classification: HypergeomClass
    common_denominator: int
    certificates: Tuple[InterlacingCertificate, ...]


@dataclass(frozen=True)
class EisensteinResult:
    """Outcome of the globally-bounded search on a coefficient prefix."""

    passed: bool
    terms_examined: int
    scale: Optional[int] = None
    witness_primes: Tuple[int, ...] = ()
    heuristic: bool = True


@dataclass(frozen=True)
class IntegralityResult:
    prime: int
    terms: int
    passed: bool
    first_failure: Optional[int] = None
    failing_valuation: Optional[int] = None
    factorial_scaled_vanishes: Optional[bool] = None


@dataclass(frozen=True)
class SeriesCongruenceResult:
    holds: bool
    checked: int
    first_failure: Optional[int] = None


@dataclass(frozen=True)
class ExponentReport:
    """Frobenius data for one rational indicial root."""

    root: Fraction
    log_free: bool
    leading_terms: Tuple[Fraction, ...] = ()


@dataclass(frozen=True)
class LocalLogsReport:
    ordinary: bool
    logs_present: bool
    indicial_polynomial: Polynomial
    rational_roots: Tuple[Fraction, ...]
    irrational_factors: Tuple[Polynomial, ...] = ()
    exponents: Tuple[ExponentReport, ...] = ()
    order_examined: int = 0


@dataclass(frozen=True)
class Char0RelationsReport:
    prime: int
    terms: int
    sign: int
    congruence_holds: bool
    pcurvature_zero: bool
    factorial_bound_holds: bool
    frobenius_bound_holds: Optional[bool] = None
    valuations: Tuple[Optional[int], ...] = ()


@dataclass(frozen=True)
class KroneckerEntry:
    prime: int
    splits: Optional[bool]
    reason: Optional[str] = None


@dataclass(frozen=True)
class KroneckerReport:
    polynomial: Polynomial
    entries: Tuple[KroneckerEntry, ...]

    @property
    def split_primes(self) -> List[int]:
        return [e.prime for e in self.entries if e.splits]

    @property
    def excluded_primes(self) -> List[int]:
        return [e.prime for e in self.entries if e.splits is None]
