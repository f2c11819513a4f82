"""Synthesis, verification and resource estimation for multi-controlled gates."""

from ._mcxsynth import (
    Circuit,
    ResourceProfile,
    SpectralResult,
    VerificationReport,
    estimate,
    literature,
    methods,
    stage_serial_depth,
    sweep_csv,
    synthesize,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "Circuit",
    "ResourceProfile",
    "SpectralResult",
    "VerificationReport",
    "estimate",
    "literature",
    "methods",
    "stage_serial_depth",
    "sweep_csv",
    "synthesize",
    "verify",
]
