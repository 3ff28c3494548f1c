#!/usr/bin/env python3
"""
Input models - validated parameters, sweep specifications and run configuration
"""

from enum import Enum
from pathlib import Path
from typing import Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..constants import DEPHASING, GAMMA_SI, PULSE_DURATION, WAVELENGTH, ZEEMAN_SPLIT


class Beam(str, Enum):
    PROBE = "probe"
    TRIGGER = "trigger"


class Overlap(str, Enum):
    """How the probe/trigger group velocities enter the pulse-overlap factor"""

    MATCHED = "matched"
    DISPERSIVE = "dispersive"


class IndexConvention(str, Enum):
    SI = "si"
    GAUSSIAN = "gaussian"


# =============================================================================
# PHYSICAL PARAMETERS
# =============================================================================

class TripodParams(BaseModel):
    """
    Physical inputs of the tripod medium. Frequencies are in units of gamma,
    dimensional quantities in SI. Defaults reproduce the single-photon regime.
    """

    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    omega_p: float = Field(0.1, ge=0)
    omega_t: float = Field(0.1, ge=0)
    omega_c: float = Field(1.0, ge=0)
    delta1: float = 20.01
    delta2: float = 20.0
    delta3: float = 20.02
    gamma_j0: Tuple[float, float, float] = (1.0, 1.0, 1.0)
    gamma_kj: Tuple[float, float, float] = (DEPHASING, DEPHASING, DEPHASING)
    gamma_si: float = Field(GAMMA_SI, gt=0)
    density: float = Field(3.0e19, ge=0)
    length: float = Field(1.6e-3, ge=0)
    lambda_p: float = Field(WAVELENGTH, gt=0)
    lambda_t: float = Field(WAVELENGTH, gt=0)
    tau_p: float = Field(PULSE_DURATION, gt=0)
    tau_t: float = Field(PULSE_DURATION, gt=0)
    zeeman_split: float = Field(ZEEMAN_SPLIT, ge=0)

    @field_validator("gamma_j0")
    @classmethod
    def _optical_rates_positive(cls, value):
        if any(rate <= 0 for rate in value):
            raise ValueError("optical decay rates gamma_10, gamma_20, gamma_30 must be > 0")
        return value

    @field_validator("gamma_kj")
    @classmethod
    def _dephasing_non_negative(cls, value):
        if any(rate < 0 for rate in value):
            raise ValueError("dephasing rates gamma_12, gamma_13, gamma_23 must be >= 0")
        return value

    @property
    def gamma_10(self) -> float:
        return self.gamma_j0[0]

    @property
    def gamma_20(self) -> float:
        return self.gamma_j0[1]

    @property
    def gamma_30(self) -> float:
        return self.gamma_j0[2]

    @property
    def gamma_12(self) -> float:
        return self.gamma_kj[0]

    @property
    def gamma_13(self) -> float:
        return self.gamma_kj[1]

    @property
    def gamma_23(self) -> float:
        return self.gamma_kj[2]

    def replace(self, **changes) -> "TripodParams":
        """Validated copy with some fields changed"""
        return TripodParams.model_validate({**self.model_dump(), **changes})


# =============================================================================
# SWEEPS
# =============================================================================

SweepParameter = Literal[
    "length", "density", "omega_c", "delta1", "delta2", "delta3", "omega_p", "omega_t"
]


class SweepSpec(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid", allow_inf_nan=False)

    parameter: SweepParameter
    start: float
    stop: float
    points: int = Field(ge=2)
    scale: Literal["linear", "log"] = "linear"

    @model_validator(mode="after")
    def _ordered_range(self):
        if not self.start < self.stop:
            raise ValueError("start must be smaller than stop")
        if self.scale == "log" and self.start <= 0:
            raise ValueError("log-scale sweeps need a strictly positive range")
        return self

    def grid(self) -> np.ndarray:
        if self.scale == "log":
            return np.geomspace(self.start, self.stop, self.points)
        return np.linspace(self.start, self.stop, self.points)


# =============================================================================
# RUN CONFIGURATION
# =============================================================================

class RunConfig(BaseModel):
    """Everything a command needs: physics plus output and pipeline options"""

    model_config = ConfigDict(frozen=True)

    params: TripodParams
    output_format: Literal["text", "json", "csv"] = "text"
    out: Optional[Path] = None
    overlap: Overlap = Overlap.MATCHED
    convention: IndexConvention = IndexConvention.SI
    source: str = "defaults"
