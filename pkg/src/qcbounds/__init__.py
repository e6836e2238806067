"""Minimum-distance bounds for type-1 quasi-cyclic LDPC codes."""

from qcbounds._core import BACKEND
from qcbounds.bounds import (
    BoundSummary,
    DetBoundReport,
    constructive_bound,
    det_bound,
    simple_bound,
    summarize,
    theorem1_witness,
)
from qcbounds.code import (
    ABSENT,
    BinaryMatrix,
    CodewordPoly,
    DegreeDistribution,
    ExponentMatrix,
    PolyMatrix,
    WeightMatrix,
    avg_weight,
    codeword_weight,
    degree_distribution,
    design_rate,
    expand,
    sort_columns_ascending,
    syndrome,
    syndrome_consistency_check,
    weight_of,
)
from qcbounds.construct import (
    ConstructionError,
    MinorSelection,
    construct_nonzero_codeword,
    det,
    lemma_codeword,
    max_nonzero_minor,
)
from qcbounds.oracle import (
    DISTANCE_UNDEFINED,
    INFEASIBLE,
    det_cofactor_oracle,
    min_distance_exhaustive,
    nullspace,
    rank_f2,
)
from qcbounds.ring import CyclicPoly, all_ones, monomial, poly_add, poly_mul, poly_weight

__version__ = "0.1.0"
