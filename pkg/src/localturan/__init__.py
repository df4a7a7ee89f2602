"""Localized weight functions for generalized Turan problems.

Weights on cliques (or copies of a small pattern) decrease in the size of
the largest clique, path, star, or cycle containing them; their totals obey
tight global bounds.  This package computes the sums exactly, verifies the
bounds and their equality characterizations on all small graphs, brute
forces generalized Turan numbers, and searches for counterexamples to the
open cycle/hypergraph conjectures.
"""

from .graphs import (
    Graph,
    bits,
    common_neighborhood,
    components,
    degree,
    from_edge_list_text,
    from_graph6,
    is_balanced_complete_multipartite,
    is_disjoint_union_of_cliques,
    components_regular_no_isolated,
    mask_of,
    to_edge_list_text,
    to_graph6,
)
from .enumeration import (
    Pattern,
    SubgraphCopy,
    cliques,
    clique_count,
    copies,
    copies_count,
    count_copies_in_clique,
    make_pattern,
    nonisomorphic_graphs,
    nonisomorphic_graphs_by_edges,
    pattern_by_name,
)
from .sizefuncs import (
    largest_clique_with,
    largest_cycle_through,
    largest_star_size,
    longest_path_through,
)
from .weights import (
    clique_weight,
    cycle_order_weight,
    cycle_size_weight,
    frohmader_weight,
    gen_binom,
    path_order_weight,
    path_size_weight,
    star_weight,
)
from .hypergraphs import (
    UniformHypergraph,
    fano_plane,
    from_hypergraph_text,
    i_degree,
    solve_x,
    to_hypergraph_text,
    uniform_hypergraph,
)
from .verify import (
    VerificationReport,
    bound_value,
    check_asymptotic_construction,
    sweep_verify,
    verify,
    verify_derived,
    verify_hypergraph,
    weighted_sum,
)
from .search import search_conjecture, turan_number

__version__ = "0.1.0"
