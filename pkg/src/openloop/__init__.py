"""Exact solver for the O(1) dense loop model on a strip with two open boundaries."""

from __future__ import annotations

from .baxter import face_weights_K0, face_weights_KL, face_weights_R, kcheck0, kcheckL, rcheck
from .chars import (
    character_auto,
    character_confluent,
    lambda_partition,
    s_character,
    symplectic_character,
    z_product,
)
from .errors import (
    ConfluentPointError,
    ConsistencyError,
    ConventionError,
    DegreeBoundError,
    NonGenericPointError,
    OpenLoopError,
    SingularParameterError,
)
from .exactfield import ONE, Q, ZERO, ZETA, IMAG, Rational, Scalar, bracket, fourth_roots, kfun
from .groundstate import (
    GroundstateVector,
    check_boundary_recursion,
    check_bulk_recursion,
    check_hamiltonian,
    check_qkz_boundary,
    check_qkz_exchange,
    check_sum_rule,
    closed_form_all_close,
    closed_form_all_open,
    eval_a,
    eval_s,
    generic_parameters,
    interpolate_all,
    interpolate_component,
    reconstruct_partial_L3,
    solve,
    solve_homogeneous,
    sum_components,
)
from .linkpat import (
    SparseOperator,
    all_patterns,
    apply_e,
    closure,
    c_from_zeta,
    generator_matrix,
    hamiltonian,
    idempotents,
    index_of,
    insert_left,
    insert_link,
    insert_right,
    word_of,
)
from .transfer import (
    NAIVE_CAP,
    SpectralPoint,
    assert_generic,
    check_T_boundary_recursion,
    check_T_recursion,
    check_column_sums,
    check_commuting,
    check_interlace,
    transfer_apply,
    transfer_apply_naive,
    transfer_matrix,
    transfer_matrix_naive,
)
from .verify import SUITE_NAMES, run_suite

__all__ = [
    "ConfluentPointError",
    "ConsistencyError",
    "ConventionError",
    "DegreeBoundError",
    "GroundstateVector",
    "IMAG",
    "NAIVE_CAP",
    "NonGenericPointError",
    "ONE",
    "OpenLoopError",
    "Q",
    "Rational",
    "SUITE_NAMES",
    "Scalar",
    "SingularParameterError",
    "SparseOperator",
    "SpectralPoint",
    "ZERO",
    "ZETA",
    "all_patterns",
    "apply_e",
    "assert_generic",
    "bracket",
    "c_from_zeta",
    "character_auto",
    "character_confluent",
    "check_T_boundary_recursion",
    "check_T_recursion",
    "check_boundary_recursion",
    "check_bulk_recursion",
    "check_column_sums",
    "check_commuting",
    "check_hamiltonian",
    "check_interlace",
    "check_qkz_boundary",
    "check_qkz_exchange",
    "check_sum_rule",
    "closed_form_all_close",
    "closed_form_all_open",
    "closure",
    "eval_a",
    "eval_s",
    "face_weights_K0",
    "face_weights_KL",
    "face_weights_R",
    "fourth_roots",
    "generator_matrix",
    "generic_parameters",
    "hamiltonian",
    "idempotents",
    "index_of",
    "insert_left",
    "insert_link",
    "insert_right",
    "interpolate_all",
    "interpolate_component",
    "kcheck0",
    "kcheckL",
    "kfun",
    "lambda_partition",
    "rcheck",
    "reconstruct_partial_L3",
    "run_suite",
    "s_character",
    "solve",
    "solve_homogeneous",
    "sum_components",
    "symplectic_character",
    "transfer_apply",
    "transfer_apply_naive",
    "transfer_matrix",
    "transfer_matrix_naive",
    "word_of",
    "z_product",
]

__version__ = "0.1.0"
