"""Six-vertex partition functions and factorial Schur functions in exact arithmetic."""

from .fschur import (
    a_mu,
    expand_in_factorial_basis,
    factorial_schur,
    vanishing_check,
    verify_main_theorem,
)
from .lattice import IceState, Vertex, enumerate_states, partition_function
from .ring import LaurentPoly, VarSpace, permute_x, render_canonical, substitute
from .shapes import GTPattern, Partition, Staircase, enumerate_gt, enumerate_ssyt
from .yangbaxter import verify_star_triangle

__all__ = [
    "GTPattern",
    "IceState",
    "LaurentPoly",
    "Partition",
    "Staircase",
    "VarSpace",
    "Vertex",
    "a_mu",
    "enumerate_gt",
    "enumerate_ssyt",
    "enumerate_states",
    "expand_in_factorial_basis",
    "factorial_schur",
    "partition_function",
    "permute_x",
    "render_canonical",
    "substitute",
    "vanishing_check",
    "verify_main_theorem",
    "verify_star_triangle",
]
