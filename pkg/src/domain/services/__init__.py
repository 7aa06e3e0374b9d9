"""
Domain services.

Pure functions over the domain entities: exact arithmetic, Ore algebra,
p-curvature, criteria and the series laboratory.
"""

from .arithmetic import (
    crt_polynomials,
    is_squarefree,
    ratfun_arith,
    reduce_mod_p,
    squarefree_decomposition,
)
from .ore import apply_op, dx_power_remainders, monicize, ore_mul, reduce_op_mod_p, right_divmod
from .pcurvature import (
    cartier_test,
    char0_series_relations,
    companion_matrix,
    compute_pcurvature,
    connection_powers,
    divided_power_relation_holds,
    fundamental_matrix_at,
    hurwitz_fundamental_solution,
    order1_series_congruence,
    pcurvature_local_series_crt,
    pcurvature_order1_closed_form,
    pcurvature_recurrence,
    pcurvature_via_remainders,
    polynomial_solution_space,
)
from .frobenius import local_logs_at_zero
from .series_lab import (
    algebraic_series_mod_p,
    check_algebraic_relation,
    diagonal_small,
    hensel_steps,
    hypergeom_series,
    is_ordinary_at_zero,
    operator_to_recurrence,
    recurrence_unroll,
    series_solve,
)
from .criteria import (
    arctan_frobenius_check,
    eisenstein_check,
    grothendieck_scan,
    hypergeom_classify,
    kelisky_residue,
    kronecker_scan,
    order1_char0_classify,
    order1_charp_has_rational,
    p_integrality_check,
    scan_prime,
)

__all__ = [
    "crt_polynomials",
    "is_squarefree",
    "ratfun_arith",
    "reduce_mod_p",
    "squarefree_decomposition",
    "apply_op",
    "dx_power_remainders",
    "monicize",
    "ore_mul",
    "reduce_op_mod_p",
    "right_divmod",
    "cartier_test",
    "char0_series_relations",
    "companion_matrix",
    "compute_pcurvature",
    "connection_powers",
    "divided_power_relation_holds",
    "fundamental_matrix_at",
    "hurwitz_fundamental_solution",
    "order1_series_congruence",
    "pcurvature_local_series_crt",
    "pcurvature_order1_closed_form",
    "pcurvature_recurrence",
    "pcurvature_via_remainders",
    "polynomial_solution_space",
    "local_logs_at_zero",
    "algebraic_series_mod_p",
    "check_algebraic_relation",
    "diagonal_small",
    "hensel_steps",
    "hypergeom_series",
    "is_ordinary_at_zero",
    "operator_to_recurrence",
    "recurrence_unroll",
    "series_solve",
    "arctan_frobenius_check",
    "eisenstein_check",
    "grothendieck_scan",
    "hypergeom_classify",
    "kelisky_residue",
    "kronecker_scan",
    "order1_char0_classify",
    "order1_charp_has_rational",
    "p_integrality_check",
    "scan_prime",
]
