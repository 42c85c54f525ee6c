"""Bound states of one-dimensional Dirac-delta potentials."""

from ._core import (
    BoundState,
    DeltaPotential,
    Parity,
    ScanResult,
    SolverError,
    Well,
    band_edges,
    band_root,
    numerical_ft,
    parseval_check,
    phi_k,
    solve,
    solve_double,
    verify,
    wavefunction,
)

__all__ = [
    "BoundState",
    "DeltaPotential",
    "Parity",
    "ScanResult",
    "SolverError",
    "Well",
    "band_edges",
    "band_root",
    "numerical_ft",
    "parseval_check",
    "phi_k",
    "solve",
    "solve_double",
    "verify",
    "wavefunction",
]
