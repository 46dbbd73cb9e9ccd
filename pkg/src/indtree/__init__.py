"""Independence polynomials of trees at -1 via branch-truncation moves."""

from .formats import ParseError, emit_edge_list, emit_graph6, parse_edge_list, parse_graph, parse_graph6
from .graph import (
    Graph,
    GraphError,
    VertexKind,
    classify_vertices,
    is_path,
    is_tree,
    path_graph,
    remove_vertices,
    spider_graph,
    star_graph,
)
from .oracle import (
    TreeGenSpec,
    all_labeled_trees,
    enumerate_ind_sets,
    fuzz_equivalence,
    random_tree,
)
from .polynomial import (
    Polynomial,
    eval_at,
    graph_ind_poly,
    path_poly,
    path_value_at_minus1,
    poly_add,
    poly_mul,
    poly_shift_mul_x,
    tree_ind_poly,
)
from .reduction import (
    Branch,
    Classification,
    Move,
    MoveKind,
    NotATreeError,
    Parity,
    ReductionStall,
    ReductionTrace,
    apply_move,
    choose_move,
    classify,
    move_parity,
    pure_branches_at,
    reduce_tree,
    value_at_minus1,
)

__version__ = "0.1.0"
