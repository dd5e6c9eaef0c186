"""Numerical laboratory for refined Bohr inequalities."""

from ._bohrlab import (
    infimum_oracle,
    lemma_checks,
    radius_r5,
    reduction_max_diff,
    sharpness,
    solve_radius,
    table,
    taylor_mobius_phi,
    verify,
)

__all__ = [
    "infimum_oracle",
    "lemma_checks",
    "radius_r5",
    "reduction_max_diff",
    "sharpness",
    "solve_radius",
    "table",
    "taylor_mobius_phi",
    "verify",
]
