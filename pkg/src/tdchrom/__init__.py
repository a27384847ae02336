"""tdchrom: exact total dominator chromatic numbers of small graphs.

Core pieces: immutable graphs and the corona / gluing operations
(:mod:`tdchrom.graphs`), TD-coloring predicates and baseline invariants
(:mod:`tdchrom.coloring`), the exact solver and its brute-force oracle
(:mod:`tdchrom.solver`), stability and bondage under vertex/edge removal
(:mod:`tdchrom.perturbation`), closed-form oracles and theorem checks
(:mod:`tdchrom.formulas`, :mod:`tdchrom.suite`), and small-graph enumeration
(:mod:`tdchrom.explorer`).  A FastAPI service (:mod:`tdchrom.service`) wraps
everything; the ``tdchrom`` CLI is a thin client of that service.
"""

from .coloring import (
    Coloring,
    TdcUndefinedError,
    chromatic_number,
    dominated_class_of,
    is_proper,
    is_td_coloring,
    parse_coloring,
    td_witness_table,
    tdc_defined,
    total_domination_number,
    write_coloring,
)
from .graphs import (
    Graph,
    GraphError,
    book,
    canonical_code,
    canonical_form,
    cartesian_product,
    complement,
    complete,
    complete_bipartite,
    complete_minus_edge,
    cycle,
    degree,
    delete_edges,
    delete_vertices,
    disjoint_union,
    find_cliques_of_size,
    friendship,
    glue,
    graph_from_edges,
    has_isolated_vertex,
    is_connected,
    isomorphic,
    neighbourhood_corona,
    parse_edge_list,
    parse_graph6,
    path,
    r_gluing,
    star,
    write_edge_list,
    write_graph6,
)
from .solver import (
    BudgetExceededError,
    CapExceededError,
    TdcResult,
    tdc_brute_force,
    tdc_decision,
    tdc_lower_bound,
    tdc_number,
    tdc_upper_bound,
)

__version__ = "0.1.0"
