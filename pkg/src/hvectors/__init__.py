"""Combinatorics of Hilbert functions of standard graded artinian algebras.

The toolkit covers exact binomial expansions and the Macaulay growth
operator, the O-sequence / differentiability / symmetry / SI predicates on
h-vectors, a three-way Gorenstein classifier that is complete in
codimension <= 3, monomial-quotient oracles (lex-segment realizations,
socle vectors, brute-force maximal growth), pivot decompositions with
growth-trace verification, and deterministic enumeration of h-vector
families.
"""

from .binomials import BinomialExpansion, binom, expand, macaulay_bound
from .decomposition import (
    DegreeTrace,
    InequalityCheck,
    PivotDecomposition,
    PreconditionViolatedError,
    RefutationReport,
    RefutedCandidate,
    TraceCase,
    TraceViolationError,
    UnsupportedCodimensionError,
    find_pivot_decomposition,
    refute_non_si,
    verify_decomposition_traces,
)
from .enumeration import (
    EnumerationSpec,
    SequenceFilter,
    count_by_degree,
    enumerate_hvectors,
)
from .monomials import (
    InfeasibleSearchError,
    Monomial,
    NotAnOSequenceError,
    SocleVector,
    SurvivorTable,
    complete_intersection_hvector,
    complete_intersection_table,
    divisors,
    hilbert_function,
    lex_segment_realization,
    max_growth_bruteforce,
    monomials_of_degree,
    render_monomial,
    socle_vector,
)
from .sequences import (
    ClassificationReport,
    HVector,
    Reason,
    ReasonKind,
    Verdict,
    classify_gorenstein,
    differentiability_violation,
    first_difference,
    first_half,
    is_differentiable,
    is_o_sequence,
    is_si_sequence,
    is_symmetric,
    is_unimodal,
    o_sequence_violation,
    si_violations,
    symmetry_violation,
    unimodality_violation,
)

__all__ = [
    "BinomialExpansion",
    "ClassificationReport",
    "DegreeTrace",
    "EnumerationSpec",
    "HVector",
    "InequalityCheck",
    "InfeasibleSearchError",
    "Monomial",
    "NotAnOSequenceError",
    "PivotDecomposition",
    "PreconditionViolatedError",
    "Reason",
    "ReasonKind",
    "RefutationReport",
    "RefutedCandidate",
    "SequenceFilter",
    "SocleVector",
    "SurvivorTable",
    "TraceCase",
    "TraceViolationError",
    "UnsupportedCodimensionError",
    "Verdict",
    "binom",
    "classify_gorenstein",
    "complete_intersection_hvector",
    "complete_intersection_table",
    "count_by_degree",
    "differentiability_violation",
    "divisors",
    "enumerate_hvectors",
    "expand",
    "find_pivot_decomposition",
    "first_difference",
    "first_half",
    "hilbert_function",
    "is_differentiable",
    "is_o_sequence",
    "is_si_sequence",
    "is_symmetric",
    "is_unimodal",
    "lex_segment_realization",
    "macaulay_bound",
    "max_growth_bruteforce",
    "monomials_of_degree",
    "o_sequence_violation",
    "refute_non_si",
    "render_monomial",
    "si_violations",
    "socle_vector",
    "symmetry_violation",
    "unimodality_violation",
    "verify_decomposition_traces",
]
