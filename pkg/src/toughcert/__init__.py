"""Spectral certification of graph toughness.

A connected graph of order n whose largest adjacency eigenvalue
reaches the certification threshold for t is 1/t-tough, except for one
explicit dominating-vertex graph that attains the threshold exactly.
This package computes the threshold, applies the test, measures exact
toughness for small graphs, and verifies the statement exhaustively
over all connected labeled graphs of small order.
"""

from .errors import (
    ConvergenceError,
    DomainError,
    Graph6ParseError,
    HypothesisError,
    SizeLimitError,
)
from .graphs import (
    Graph,
    complete,
    components_after_removal,
    disjoint_union,
    empty,
    from_edges,
    is_connected,
    is_extremal,
    iter_graph6,
    join,
    parse_graph6,
    to_graph6,
)
from .spectral import (
    Spectrum,
    adjacency_matrix,
    full_spectrum,
    is_equitable,
    quotient_matrix,
    quotient_radius_check,
    quotient_spectrum,
    spectral_radius,
)
from .thresholds import (
    Cubic,
    JoinCliqueSpec,
    ThresholdResult,
    build_extremal,
    build_join_cliques,
    complete_split_radius,
    gap_bound,
    gap_factor,
    quotient_cubic,
    threshold,
    threshold_cubic,
)
from .toughness import ToughnessResult, is_one_over_t_tough, toughness_exact
from .verify import (
    CertificateReport,
    VerificationSummary,
    certify,
    enumerate_connected,
    graph_from_mask,
    mask_of_graph,
    report_lines,
    verify_join_maximizer,
    verify_quotient_embedding,
    verify_subgraph_monotonicity,
    verify_theorem,
    verify_threshold_identities,
    write_report,
)

__version__ = "0.1.0"
