"""Exact computations for the Z2xZ2-graded general linear Lie superalgebra.

gl(m1,m2|n1,n2) is realised from gl(m|n) by dressing generators with the
Klein operators B_k = (-1)^{H_k}; this package builds the matrices and
checks every relation by exhaustive exact computation.
"""

from .casimir import VARIANTS, casimir_matrix, casimir_summary, centrality_report, hw_eigenvalue
from .colour import bracket_flip_table, colour_sign, colour_structure, verify_colour_relations
from .exact import (
    DimensionError,
    ExactMatrix,
    NotAnEigencolumn,
    diagonal_from,
    elementary,
    graded_bracket,
    mat_add,
    mat_mul,
    mat_scale,
)
from .grading import (
    GradedSignature,
    all_signatures,
    classify_region,
    dot22,
    pair_degree,
    pair_degree22,
    z2_degree,
    z22_degree,
)
from .klein import WeightDiagonalRep, b_matrix, b_sign, realise, verify_b_commutation
from .report import VerificationReport, Violation
from .representations import (
    GZPattern,
    WeightRepProvider,
    colour_diagonal_action,
    defining_pattern,
    defining_rep,
    graded_tensor_power,
    graded_tensor_product,
    graded_tensor_square,
    gz_b_sign,
    gz_cartan_eigenvalue,
    gz_row_sums,
    sign_lift_matrix_element,
)
from .superalg import h_bracket_sign, h_element, super_sign, super_structure, verify_super_relations

__version__ = "0.1.0"
