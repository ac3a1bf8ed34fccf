"""Betti tables and matrix factorizations of MCM modules over a plane cubic."""

from ._core import (
    CubicMcmError,
    betti_at,
    betti_general,
    betti_table,
    euler_form,
    h0,
    hilbert,
    hilbert_coefficients,
    is_ulrich,
    mf_betti,
    mf_build,
    mf_verify,
    orbit_V,
    points,
    reduce3,
    reduce6,
    run_cli,
    sigma_power,
    syzygy,
)

__all__ = [
    "CubicMcmError",
    "betti_at",
    "betti_general",
    "betti_table",
    "euler_form",
    "h0",
    "hilbert",
    "hilbert_coefficients",
    "is_ulrich",
    "mf_betti",
    "mf_build",
    "mf_verify",
    "orbit_V",
    "points",
    "reduce3",
    "reduce6",
    "run_cli",
    "sigma_power",
    "syzygy",
]
