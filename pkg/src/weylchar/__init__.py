"""Graded characters of local Weyl modules for the current algebra sl(n+1)[t].

The package computes graded (t-degree) characters via two independent
routes -- per-cell Gaussian binomial weights on Gelfand-Tsetlin patterns and
explicit partition-overlaid pattern enumeration -- and verifies closed-form
factorizations of tensor products, truncated modules and rank-2 fusion
modules against brute-force products.
"""

from .weights import (
    Partition,
    RankMismatchError,
    Root,
    Weight,
    dominance_leq,
    dominant_weights_up_to,
    pairing,
    partition_to_weight,
    positive_roots,
    theta_coeffs,
    w0_dual,
    weight_to_bounding_partition,
)
from .qalg import (
    IntegralityError,
    QFactorRatio,
    QPoly,
    grade_shift,
    one_minus_q,
    q_binomial,
    q_int,
    q_pochhammer,
)
from .gtpop import (
    BasisWord,
    GTPattern,
    POP,
    basis_word,
    bounded_partitions,
    cell_bounds,
    cells,
    enumerate_gt,
    enumerate_pops,
    lowest_weight_pop,
    pattern_weight,
    pop_compare,
    pop_count,
    pop_grade,
)
from .charformulas import (
    DecompositionError,
    GradedCharacter,
    arm_leg,
    b_factor_t0,
    char_multiply,
    decompose_weyl_basis,
    irreducible_char,
    m_module_char,
    pieri_gm,
    pop_char,
    product_onerow,
    qwhittaker_char,
    qwhittaker_partition_char,
    tensor_char_fundamental,
    truncated_char,
)
from .filtration import (
    FiltrationLayer,
    VerificationReport,
    XiTuple,
    extract_filtration,
    fusion_dim,
    layer_character,
    truncated_dim_check,
    verify_fusion_recurrences,
    verify_m_module_product,
    verify_tensor_fundamental,
    verify_truncated_product,
)

__version__ = "0.1.0"

__all__ = [
    "BasisWord",
    "DecompositionError",
    "FiltrationLayer",
    "GTPattern",
    "GradedCharacter",
    "IntegralityError",
    "POP",
    "Partition",
    "QFactorRatio",
    "QPoly",
    "RankMismatchError",
    "Root",
    "VerificationReport",
    "Weight",
    "XiTuple",
    "arm_leg",
    "b_factor_t0",
    "basis_word",
    "bounded_partitions",
    "cell_bounds",
    "cells",
    "char_multiply",
    "decompose_weyl_basis",
    "dominance_leq",
    "dominant_weights_up_to",
    "enumerate_gt",
    "enumerate_pops",
    "extract_filtration",
    "fusion_dim",
    "grade_shift",
    "irreducible_char",
    "layer_character",
    "lowest_weight_pop",
    "m_module_char",
    "one_minus_q",
    "pairing",
    "partition_to_weight",
    "pattern_weight",
    "pieri_gm",
    "pop_char",
    "pop_compare",
    "pop_count",
    "pop_grade",
    "positive_roots",
    "product_onerow",
    "q_binomial",
    "q_int",
    "q_pochhammer",
    "qwhittaker_char",
    "qwhittaker_partition_char",
    "tensor_char_fundamental",
    "theta_coeffs",
    "truncated_char",
    "truncated_dim_check",
    "verify_fusion_recurrences",
    "verify_m_module_product",
    "verify_tensor_fundamental",
    "verify_truncated_product",
    "w0_dual",
    "weight_to_bounding_partition",
]
