"""Strong stable sets in claw-free graphs.

A stable set is *strong* when it meets every maximal clique. This package
detects the five forbidden families whose absence characterizes the
claw-free graphs in which strong stable sets always exist (odd holes, long
antiholes, odd prisms, handcuffs, eye masks), finds the decompositions the
characterization routes through (clique cutsets, 1-joins, W-joins, linear
interval orders, line graphs of bipartite multigraphs and their smooth
augmentations), and computes strong stable sets constructively, with a
brute-force oracle for verification.
"""

__version__ = "0.1.0"

from .core import (
    Budget,
    BudgetExceededError,
    DEFAULT_BUDGET,
    Graph,
    GraphError,
    Multigraph,
    anticomponents,
    complement,
    components,
    from_edge_list,
    induced,
    induced_paths_between,
    is_strong_stable_set,
    line_graph,
    maximal_cliques,
)
from .forbidden import ForbiddenKind, ForbiddenWitness, Innocent, find_structure, innocence_certificate, verify_witness
from .recognizers import (
    find_claw,
    find_clowns,
    is_consistent_set,
    is_safe_vertex,
    simplicial_vertices,
)
from .solver import SolveResult, SolveStatus, brute_force, solve

__all__ = [
    "Budget",
    "BudgetExceededError",
    "DEFAULT_BUDGET",
    "ForbiddenKind",
    "ForbiddenWitness",
    "Graph",
    "GraphError",
    "Innocent",
    "Multigraph",
    "SolveResult",
    "SolveStatus",
    "anticomponents",
    "brute_force",
    "complement",
    "components",
    "find_claw",
    "find_clowns",
    "find_structure",
    "from_edge_list",
    "induced",
    "induced_paths_between",
    "innocence_certificate",
    "is_consistent_set",
    "is_safe_vertex",
    "is_strong_stable_set",
    "line_graph",
    "maximal_cliques",
    "simplicial_vertices",
    "solve",
    "verify_witness",
    "__version__",
]
