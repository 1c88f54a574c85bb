"""Exact mutual-visibility and general position invariants of graphs, with
generators for glued tree families and closed-form checks."""

from .closed_forms import Prediction, ggt_gp_lower_bound, ggt_mu_lower_bound, predict
from .families import (
    FamilyMetadata,
    FamilySpec,
    build_generalized_glued,
    build_glued,
    build_perfect_tree,
    find_twin_groups,
    quasi_twin_map,
    to_dot,
    twin_groups,
)
from .graph import (
    DisconnectedGraphError,
    Graph,
    GraphInputError,
    VertexSet,
    claw_centers,
    count_shortest_paths,
    format_edge_list,
    from_edge_list,
    is_isometric_subgraph,
    on_some_shortest_path,
    parse_edge_list,
    simplicial_vertices,
)
from .solver import SolveResult, StructureCheck, enumerate_max_sets, max_set, verify_structure
from .visibility import KIND_ORDER, VariantKind, classify_set, s_positionable, s_visible

__version__ = "0.1.0"
