"""Exact solvers, constructions and checks for total k-rainbow domination in digraphs."""

from .digraph import Digraph, cartesian_product, parse_edge_list
from .errors import BudgetExceeded, InvalidInput
from .grid import GridSpec, closed_form, dp_gamma_trk
from .rainbow import RainbowAssignment, is_krdf, is_tkrdf, weight
from .solve import SolveBudget, SolveResult, gamma, gamma_rk, gamma_t, gamma_trk, solve

__all__ = [
    "BudgetExceeded",
    "Digraph",
    "GridSpec",
    "InvalidInput",
    "RainbowAssignment",
    "SolveBudget",
    "SolveResult",
    "cartesian_product",
    "closed_form",
    "dp_gamma_trk",
    "gamma",
    "gamma_rk",
    "gamma_t",
    "gamma_trk",
    "is_krdf",
    "is_tkrdf",
    "parse_edge_list",
    "solve",
    "weight",
]
