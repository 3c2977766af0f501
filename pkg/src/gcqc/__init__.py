"""Generalized concatenated quantum codes in the stabilizer formalism."""

from gcqc.builder import (
    GcqcResult,
    OuterCodeSpec,
    build_gcqc,
    build_s_i,
    distance_bound,
    lift_operator,
    make_outer,
    verify_lemma1,
)
from gcqc.distance import DistanceReport, min_distance, min_weight_in_group
from gcqc.partition import CosetCode, NestingStrategy, SubcodeChain, build_chain, coset_code, coset_distance
from gcqc.pauli import (
    PauliOperator,
    format_pauli,
    multiply,
    parse_pauli,
    symplectic_product,
    tensor_embed,
    weight,
)
from gcqc.stabilizer import (
    StabilizerCode,
    complete_logicals,
    in_stabilizer_group,
    is_degenerate,
    rank_gf2,
    validate,
)

__version__ = "0.1.0"
