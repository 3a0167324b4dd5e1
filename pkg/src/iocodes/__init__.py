"""Identifying open codes in graphs.

An identifying open code (IO-code) is a vertex set that is both a total
dominating set and a separating open code: every vertex has a neighbor
in the set, and the traces N(v) & S are pairwise distinct.  The package
provides exact minimum-code solving, verification with witnesses,
generators for the known extremal families, constructive algorithms
that certify the (2*delta - 1)/(2*delta) degree bound, and an audit
harness over exhaustively enumerated trees and small graphs.
"""

__version__ = "0.1.0"

from .audit import (
    AuditRecord,
    audit_graphs,
    audit_graphs_sampled,
    audit_trees,
    verify_tight_families,
)
from .canon import canonical_graph, canonical_graph6, isomorphic
from .construct import (
    BoundStatus,
    ConstructionTrace,
    check_bound,
    construct_graph_code,
    construct_tree_code,
)
from .errors import (
    BadParam,
    ConstructionError,
    DegreeExceeded,
    Disconnected,
    EmptyGraph,
    FourCyclePresent,
    GraphError,
    InvalidVertex,
    NoCode,
    NotATree,
    NotInFamily,
    NotPresent,
    ParseError,
    TooLarge,
    TooSmall,
    UniverseMismatch,
)
from .families import (
    AttachmentVector,
    FamilySpec,
    as_reduced_subdivided_star,
    as_subdivided_star,
    build_family_tree,
    canonical_set,
    enumerate_small_graphs,
    enumerate_trees,
    gen_reduced_subdivided_star,
    gen_star_plus_edge,
    gen_subcubic_gp,
    gen_subdivided_star,
    gen_tight_tree_pair,
    recognize_family,
    recognize_family_rooted,
)
from .formats import emit_edge_list, emit_graph6, load_graph, parse_edge_list, parse_graph6
from .graphs import (
    Graph,
    VertexSet,
    classify_vertices,
    components,
    delete_edge,
    delete_vertex,
    diameter,
    find_induced_cycle,
    find_open_twins,
    has_four_cycle,
    is_connected,
    longest_path_in_tree,
    max_degree,
    min_degree,
    open_neighborhood,
)
from .solver import SolveResult, solve, solve_oracle, solve_with_budget
from .verify import Verdict, admits_io_code, is_io_code, is_separating_open_code, is_total_dominating

__all__ = [name for name in dir() if not name.startswith("_")]
