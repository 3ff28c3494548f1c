#!/usr/bin/env python3
"""
Models package - validated inputs and immutable result records
"""

from .params import Beam, IndexConvention, Overlap, RunConfig, SweepSpec, TripodParams
from .result_models import (
    ChiExtraction,
    ComplexDetunings,
    DensityMatrix4,
    DipoleMoments,
    GroupVelocities,
    OracleRow,
    PhaseTable,
    PolarizationMargin,
    PolarizationQubit,
    SearchResult,
    SusceptibilityReport,
    TruthTable,
    TwoQubitState,
    UniversalityReport,
)

__all__ = [
    "Beam",
    "IndexConvention",
    "Overlap",
    "RunConfig",
    "SweepSpec",
    "TripodParams",
    "ChiExtraction",
    "ComplexDetunings",
    "DensityMatrix4",
    "DipoleMoments",
    "GroupVelocities",
    "OracleRow",
    "PhaseTable",
    "PolarizationMargin",
    "PolarizationQubit",
    "SearchResult",
    "SusceptibilityReport",
    "TruthTable",
    "TwoQubitState",
    "UniversalityReport",
]
