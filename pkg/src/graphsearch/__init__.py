"""Approximation algorithms for average-case search in graphs with
non-uniform query costs and vertex weights."""

from .cuts import CutSolver, VertexCut, check_cut, cut_exact, cut_heuristic, lambda_partition
from .decision_tree import (
    DecisionTree,
    LevelFamily,
    cost_contribution,
    cost_pathsum,
    levels,
    load_tree,
    query_sequence,
    save_tree,
    validate,
)
from .errors import *  # noqa: F401,F403
from .instance import (
    SearchInstance,
    components,
    gen_random_graph,
    gen_random_tree,
    hardness_reduction,
    load_instance,
    neighbors_of_subgraph,
    save_instance,
)
from .oracles import opt_cost, opt_decision_tree, opt_levels
from .separator import SeparatorResult, separator_bruteforce, separator_exact, separator_fptas
from .strategies import partial_tree_from_separator, solve_graph, solve_tree

__version__ = "0.1.0"
