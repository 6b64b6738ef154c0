"""Independent numerical oracles: Hermite functions, Gauss-Hermite rules and
finite-difference eigensolvers."""

from .eigen import (
    EigenResult,
    GridSpec,
    bounce_hamiltonian_1d,
    classify_state,
    count_nodes,
    coupled_hamiltonian_2d,
    default_grid,
    solve_bounce_1d,
    solve_coupled_2d,
    symmetric_eigs,
)
from .hermite import gauss_hermite_rule, hermite_function, hermite_functions

__all__ = [
    "EigenResult",
    "GridSpec",
    "bounce_hamiltonian_1d",
    "classify_state",
    "count_nodes",
    "coupled_hamiltonian_2d",
    "default_grid",
    "gauss_hermite_rule",
    "hermite_function",
    "hermite_functions",
    "solve_bounce_1d",
    "solve_coupled_2d",
    "symmetric_eigs",
]
