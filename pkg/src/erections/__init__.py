"""Erections of simple matroids, free erections and Whitney-number bounds."""
from ._kernels import BACKEND
from .bounds import (
    BoundReport,
    ConcavityReport,
    a_counts,
    bound_sum,
    check_free_lc,
    check_log_concavity,
    min_coline,
    minimize_bound,
)
from .core import (
    Check,
    Matroid,
    SetFamily,
    apply_permutation,
    bases,
    build_from_copoints,
    closure,
    is_k_closed,
    rank_of_set,
    seed_matroid,
    truncation,
    validate_copoint_family,
    verify_erection_copoints,
    whitney,
)
from .erection import (
    ErectionResult,
    erect_with,
    expand,
    free_erection,
    free_erection_via_pair,
    in_strict_filter,
    pair_family,
    random_erection,
    random_matroid,
    refine,
)
from .plp import (
    BipartiteIncidence,
    beta_count,
    beta_subsets,
    export_dot,
    graph_from_rank3,
    has_property_beta,
    plp_bound_check,
    restrict,
)

__all__ = [
    "BACKEND",
    "BipartiteIncidence",
    "BoundReport",
    "Check",
    "ConcavityReport",
    "ErectionResult",
    "Matroid",
    "SetFamily",
    "a_counts",
    "apply_permutation",
    "bases",
    "beta_count",
    "beta_subsets",
    "bound_sum",
    "build_from_copoints",
    "check_free_lc",
    "check_log_concavity",
    "closure",
    "erect_with",
    "expand",
    "export_dot",
    "free_erection",
    "free_erection_via_pair",
    "graph_from_rank3",
    "has_property_beta",
    "in_strict_filter",
    "is_k_closed",
    "min_coline",
    "minimize_bound",
    "pair_family",
    "plp_bound_check",
    "random_erection",
    "random_matroid",
    "rank_of_set",
    "refine",
    "restrict",
    "seed_matroid",
    "truncation",
    "validate_copoint_family",
    "verify_erection_copoints",
    "whitney",
]
