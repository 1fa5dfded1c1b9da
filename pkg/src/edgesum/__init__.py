"""Minimum-sum edge colorings.

Approximation for regular graphs, sequential colorings of bipartite graphs,
split-graph upper bounds, closed forms for complete graphs and an exact
branch-and-bound oracle.
"""

from .coloring import EdgeColoring, VerificationReport, shift_colors, verify_coloring
from .exact import (
    ExactResult,
    bipartite_onesided_lower_bound,
    decide_sequential,
    exact_sum,
    general_lower_bound,
)
from .generators import (
    gen_bipartite_dominant,
    gen_complete,
    gen_petersen,
    gen_random_regular,
    gen_split,
)
from .graph import BipartitionInfo, Graph, GraphError, SplitDecomposition
from .io import parse_graph, read_graph
from .kernels import clique_factorization, koenig_color, vizing_color
from .regular import (
    ApproxReport,
    approx_sum_regular,
    kn_exact_sum,
    kn_optimal_coloring,
    regular_lower_bound,
)
from .sequential import is_sequential, missing_sets, swap_to_sequential, u_sequential_color
from .split import SplitBoundReport, split_color, split_formula_bounds

__version__ = "0.1.0"
