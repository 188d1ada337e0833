"""Exact domination-theory toolkit.

Computes domination numbers, minimum-dominating-set enumerations,
efficient dominating sets (perfect codes), bondage numbers and
vertex-criticality structure on finite simple graphs, classifies graphs
into the hypo-efficient-domination and hypo-unique-domination classes,
and machine-checks the structural claims behind those classes over
exhaustive small-graph streams.
"""

from .graph import (
    CirculantSpec,
    Graph,
    Graph6Error,
    add_edge,
    circulant,
    closed_neighborhood,
    coalescence,
    complement,
    complete_graph,
    complete_minus_matching,
    corona,
    cycle,
    delete_edge,
    delete_vertex,
    disjoint_union,
    empty_graph,
    from_edges,
    has_cut_vertex,
    is_2_edge_connected,
    is_connected,
    is_regular,
    is_tree,
    is_unicyclic,
    join,
    max_degree,
    min_degree,
    parse_graph6,
    path,
    write_graph6,
)
from .canon import (
    canonical_g6,
    canonical_graph,
    certificate,
    is_isomorphic,
    is_self_complementary,
)
from .domination import (
    DominationReport,
    GammaSets,
    bondage_number,
    domination_number,
    domination_report,
    enumerate_min_dominating_sets,
    gamma_critical_vertices,
    gamma_set_count,
    is_bicritical,
    is_gamma_ea_critical,
    is_vc_graph,
    unique_min_dominating_set,
)
from .eds import EdsResult, enumerate_eds, find_eds, has_eds
from .hypo import (
    BoundCheck,
    BoundReport,
    EqualityWitness,
    HypoReport,
    MinusOneReport,
    check_ed_structure,
    check_minusone,
    check_ud_bounds,
    classify,
    is_hypo_ed,
    is_hypo_ud,
)
from .harness import (
    CLAIMS,
    PROBLEMS,
    ClaimReport,
    ExceptionCatalog,
    brute_force_gamma,
    derive_exception_catalog,
    search_open_problems,
    verify_all,
    verify_claim,
)

__version__ = "0.1.0"
