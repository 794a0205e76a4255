"""Exact minimum fill-in with a kernel, branching on obscured paths and a
dynamic program over vital potential maximal cliques."""
from ._kernels import BACKEND
from .branching import FillInInstance, apply_branch, find_obscured_path, reduce_to_nonreducible
from .chordal import (
    elimination_game,
    find_chordless_cycle,
    is_chordal,
    is_minimal_triangulation,
    maximal_cliques_chordal,
    minimal_separators_chordal,
    minimal_triangulation,
    perfect_elimination_ordering,
)
from .dp import FillSolution, VerificationError, mfi_block, mfi_root, reconstruct, solve
from .graph import Graph
from .kernel import KernelResult, KernelStatus, SandwichInstance, fillin_kernel, kernelize
from .pmc import PmcCatalog, enumerate_quasi_cliques, enumerate_vital_pmcs, verify_pmc
from .reductions import (
    BipartiteGraph,
    Coloring,
    chain_to_fillin,
    colored_to_sandwich,
    is_chain_graph,
    solve_chain,
    solve_colored,
    solve_sandwich,
)

__version__ = "0.1.0"


__all__ = [
    "BACKEND",
    "FillInInstance",
    "apply_branch",
    "find_obscured_path",
    "reduce_to_nonreducible",
    "elimination_game",
    "find_chordless_cycle",
    "is_chordal",
    "is_minimal_triangulation",
    "maximal_cliques_chordal",
    "minimal_separators_chordal",
    "minimal_triangulation",
    "perfect_elimination_ordering",
    "FillSolution",
    "VerificationError",
    "mfi_block",
    "mfi_root",
    "reconstruct",
    "solve",
    "Graph",
    "KernelResult",
    "KernelStatus",
    "SandwichInstance",
    "fillin_kernel",
    "kernelize",
    "PmcCatalog",
    "enumerate_quasi_cliques",
    "enumerate_vital_pmcs",
    "verify_pmc",
    "BipartiteGraph",
    "Coloring",
    "chain_to_fillin",
    "colored_to_sandwich",
    "is_chain_graph",
    "solve_chain",
    "solve_colored",
    "solve_sandwich",
]
