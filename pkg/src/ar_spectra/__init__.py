"""Exact spectra of a recursively defined {-1,0,1} matrix family."""

from .caps import DEFAULT_MAX_N, SizeCapError
from .combinatorics import (
    Composition,
    Run,
    SubsetMask,
    admissible,
    arrow,
    composition_of_set,
    composition_prefix_weight,
    composition_weight,
    compositions,
    dominates,
    from_rank,
    interior_run_weight,
    rank,
    run_weight,
    runs,
    set_of_composition,
)
from .matrices import (
    ExactMatrix,
    build_a_entrywise,
    build_a_recursive,
    build_b_entrywise,
    build_b_recursive,
    conjugate,
    entry_a,
    entry_b,
    fast_matvec_a,
    fast_matvec_b,
    mobius_matrix,
    permute_conjugate,
    zeta_matrix,
)
from .oracle import (
    CLAIM_FAMILIES,
    DEFAULT_ORACLE_DIM,
    VerificationOutcome,
    char_poly_interpolated,
    oracle_char_poly,
    oracle_det,
    run_claims,
    shifted_det,
    verify_anti_triangular,
    verify_antidiagonal_values,
    verify_block_form,
    verify_diagonal_blocks,
    verify_support,
)
from .permutation import (
    PairingTable,
    format_table,
    is_valid_pairing,
    membership_word,
    membership_word_blocks,
    pairing_as_permutation,
    pairing_closed_form,
    pairing_table,
    pairing_table_closed,
    thue_morse,
    thue_morse_word,
)
from .spectrum import (
    IntPolynomial,
    SpectrumRecord,
    SpectrumReport,
    blockform_radicands,
    char_poly_blockform,
    char_poly_formula_a,
    char_poly_formula_b,
    radicands_a,
    radicands_b,
    report_plain,
    report_structured,
    spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MAX_N",
    "SizeCapError",
    "Composition",
    "Run",
    "SubsetMask",
    "admissible",
    "arrow",
    "composition_of_set",
    "composition_prefix_weight",
    "composition_weight",
    "compositions",
    "dominates",
    "from_rank",
    "interior_run_weight",
    "rank",
    "run_weight",
    "runs",
    "set_of_composition",
    "ExactMatrix",
    "build_a_entrywise",
    "build_a_recursive",
    "build_b_entrywise",
    "build_b_recursive",
    "conjugate",
    "entry_a",
    "entry_b",
    "fast_matvec_a",
    "fast_matvec_b",
    "mobius_matrix",
    "permute_conjugate",
    "zeta_matrix",
    "CLAIM_FAMILIES",
    "DEFAULT_ORACLE_DIM",
    "VerificationOutcome",
    "char_poly_interpolated",
    "oracle_char_poly",
    "oracle_det",
    "run_claims",
    "shifted_det",
    "verify_anti_triangular",
    "verify_antidiagonal_values",
    "verify_block_form",
    "verify_diagonal_blocks",
    "verify_support",
    "PairingTable",
    "format_table",
    "is_valid_pairing",
    "membership_word",
    "membership_word_blocks",
    "pairing_as_permutation",
    "pairing_closed_form",
    "pairing_table",
    "pairing_table_closed",
    "thue_morse",
    "thue_morse_word",
    "IntPolynomial",
    "SpectrumRecord",
    "SpectrumReport",
    "blockform_radicands",
    "char_poly_blockform",
    "char_poly_formula_a",
    "char_poly_formula_b",
    "radicands_a",
    "radicands_b",
    "report_plain",
    "report_structured",
    "spectrum",
    "__version__",
]
