"""Threshold graphs: encodings, exact lazy-walk counts, spectral bounds.

The package models connected threshold graphs in four interchangeable
encodings, counts lazy walks between dominating-type vertices exactly,
computes spectral radii, evaluates closed-form lower and upper bounds on
them, and searches exhaustively for the spectral-radius maximizers at a
fixed number of vertices and edges.
"""

from .graph_model import (
    BzpSequence,
    CompositionSpec,
    FopSequence,
    ParseError,
    ThresholdGraph,
    adjacency_matrix,
    degree_sequence,
    from_bzp,
    from_composition,
    from_fop,
    from_generating_sequence,
    parse_composition,
    to_bzp,
    to_composition,
    to_fop,
)
from .walks import (
    WalkTable,
    count_lazy_walks,
    count_walks_with_signature,
    fp_sequence,
    fp_via_max_indices,
    fp_via_min_products,
    fp_via_one_overlap,
    fp_via_zero_overlap,
    growth_estimate,
    lw_bruteforce,
    lw_double_prime,
    lw_prime,
    lw_recurrence,
    one_overlap_matrix,
    zero_overlap_matrix,
)
from .spectral import (
    ConvergenceError,
    EigenDecomposition,
    Polynomial,
    RootResult,
    fp_spectral_bzp,
    fp_spectral_fop,
    greatest_real_root,
    perron_vector,
    spectral_radius,
    symmetric_eigen,
)
from .bounds import (
    BoundReport,
    PreconditionError,
    bound_report,
    inequality_check,
    inequality_polynomial,
    inequality_root,
    lower_corollary,
    lower_cubic,
    lower_cubic_polynomial,
    lower_quadratic,
    upper_cubic,
    upper_cubic_polynomial,
)
from .extremal import (
    ConjecturePair,
    ExtremalResult,
    MaximizerPrediction,
    VerificationReport,
    enumerate_threshold_graphs,
    find_extremal,
    predict_maximizers,
    verify_predictions,
)

__all__ = [
    "BzpSequence",
    "CompositionSpec",
    "FopSequence",
    "ParseError",
    "ThresholdGraph",
    "adjacency_matrix",
    "degree_sequence",
    "from_bzp",
    "from_composition",
    "from_fop",
    "from_generating_sequence",
    "parse_composition",
    "to_bzp",
    "to_composition",
    "to_fop",
    "WalkTable",
    "count_lazy_walks",
    "count_walks_with_signature",
    "fp_sequence",
    "fp_via_max_indices",
    "fp_via_min_products",
    "fp_via_one_overlap",
    "fp_via_zero_overlap",
    "growth_estimate",
    "lw_bruteforce",
    "lw_double_prime",
    "lw_prime",
    "lw_recurrence",
    "one_overlap_matrix",
    "zero_overlap_matrix",
    "ConvergenceError",
    "EigenDecomposition",
    "Polynomial",
    "RootResult",
    "fp_spectral_bzp",
    "fp_spectral_fop",
    "greatest_real_root",
    "perron_vector",
    "spectral_radius",
    "symmetric_eigen",
    "BoundReport",
    "PreconditionError",
    "bound_report",
    "inequality_check",
    "inequality_polynomial",
    "inequality_root",
    "lower_corollary",
    "lower_cubic",
    "lower_cubic_polynomial",
    "lower_quadratic",
    "upper_cubic",
    "upper_cubic_polynomial",
    "ConjecturePair",
    "ExtremalResult",
    "MaximizerPrediction",
    "VerificationReport",
    "enumerate_threshold_graphs",
    "find_extremal",
    "predict_maximizers",
    "verify_predictions",
]
