"""Exact E8/A8 Weyl-orbit decompositions, orbit characters, Casimir-eigenvalue
polynomials and weight multiplicities, all in exact rational arithmetic."""

from _e8cas import (  # noqa: F401
    casimir_eval,
    char_e8_orbit,
    char_rep,
    count_partitions_2to9,
    dim_rep,
    e8_orbit_size,
    multiplicities,
    set_thread_count,
    sigma_set,
    solve_multiplicities,
    theta,
    verify_duality,
    verify_omega,
)

__all__ = [
    "casimir_eval",
    "char_e8_orbit",
    "char_rep",
    "count_partitions_2to9",
    "dim_rep",
    "e8_orbit_size",
    "multiplicities",
    "set_thread_count",
    "sigma_set",
    "solve_multiplicities",
    "theta",
    "verify_duality",
    "verify_omega",
]

__version__ = "0.1.0"
