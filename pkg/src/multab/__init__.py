"""Induced-subgraph size certificates for bipartite multigraphs.

The package certifies lower bounds on the number of distinct induced-
subgraph edge counts of a bipartite (multi)graph by exhibiting witness
vertex subsets, exposes a brute-force oracle for small instances, and
ships multiplication-table statistics plus an HTTP service and CLI.
"""

from .bigraph import (
    BipartiteMultigraph,
    Contraction,
    DegreeProfile,
    classify_type,
    contract_groups,
    degree_profile,
    disjoint_union,
    induced_edge_count,
    induced_subgraph,
    parse_graph_text,
    write_graph_text,
)
from .certify import (
    CertEntry,
    Certificate,
    PipelineReport,
    VerificationReport,
    certificate_from_json,
    certificate_to_json,
    certify_pipeline,
    trivial_certificate,
    verify_certificate,
    warm_up_half_regular,
)
from .errors import (
    BudgetError,
    ConfigError,
    InputError,
    InternalCheckError,
    MultabError,
    ParseError,
)
from .oracle import (
    FordEstimate,
    brute_multiplication_table,
    conjecture_search,
    ford_estimate,
    oracle_consistency,
    table_nn,
)
from .partition import (
    CoverTrace,
    EqualSumMatching,
    best_matching_for_r,
    find_equal_sum_set,
    greedy_cover,
    maximal_matching,
)
from .profiles import ScaleProfile, profile_from_name
from .sumset import (
    Seq,
    SizeSet,
    mixed_block_bound_holds,
    repeated,
    residues_mod,
    subset_sums,
    sumset_add,
    two_block_bound_holds,
)

__version__ = "0.1.0"
