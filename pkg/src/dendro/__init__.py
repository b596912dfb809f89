"""Exact path counts and distance indices of dendrimers T(n,k)."""

from .exact_arith import ExactDivisionError, binomial, exact_div, geometric_sum
from .indices import (
    IndexReport,
    average_distance,
    index_report,
    medium_domination,
    sigma_sum,
    total_distance_from_counts,
    wiener_closed,
    wiener_from_counts,
)
from .model import (
    DendrimerParams,
    diameter,
    edge_count,
    internal_vertex_count,
    leaf_count,
    vertex_count,
)
from .oracle import (
    TreeGraph,
    build_dendrimer,
    distance_histogram,
    endpoint_breakdown,
    random_tree,
    wiener_brute,
)
from .paths import (
    PathLengthTable,
    identity_check,
    n1_leaf_paths,
    n2_leaf_paths,
    path_count_closed,
    path_count_recursive,
    path_count_table,
)

__version__ = "0.1.0"
