"""Bound-state spectra and wavefunctions for the Modified Mobius Square potential."""

from ._core import (  # noqa: F401
    ApproximationScheme,
    InvalidStateError,
    NoBoundLevelsError,
    NoBoundStateError,
    OracleResult,
    PhysicalContext,
    PotentialParams,
    RadialFunctionTable,
    SpectrumRecord,
    SupercriticalError,
    ValidityFlags,
    centrifugal_approx,
    energy_level,
    enumerate_spectrum,
    eval_potential,
    jacobi_p,
    oracle_solve,
    radial_table,
    solve_quantization,
)

__all__ = [
    "ApproximationScheme",
    "InvalidStateError",
    "NoBoundLevelsError",
    "NoBoundStateError",
    "OracleResult",
    "PhysicalContext",
    "PotentialParams",
    "RadialFunctionTable",
    "SpectrumRecord",
    "SupercriticalError",
    "ValidityFlags",
    "centrifugal_approx",
    "energy_level",
    "enumerate_spectrum",
    "eval_potential",
    "jacobi_p",
    "oracle_solve",
    "radial_table",
    "solve_quantization",
]
