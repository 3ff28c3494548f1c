#!/usr/bin/env python3
"""
Result models - immutable records produced by the services
"""

import math
from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator, model_validator

from ..constants import NORM_TOLERANCE, STATE_TOLERANCE, UNPHYSICAL_STATE_ERROR
from ..errors import UnphysicalStateError


class Record(BaseModel):
    model_config = ConfigDict(frozen=True)


# =============================================================================
# SUSCEPTIBILITIES
# =============================================================================

class ComplexDetunings(Record):
    """Complex detunings in units of gamma"""

    d10: complex
    d30: complex
    d12: complex
    d13: complex
    d23: complex


class DipoleMoments(Record):
    """Squared dipole matrix elements in (C m)^2"""

    mu_p_sq: float = Field(gt=0)
    mu_t_sq: float = Field(gt=0)

    def scaled(self, factor: float) -> "DipoleMoments":
        return DipoleMoments(mu_p_sq=self.mu_p_sq * factor, mu_t_sq=self.mu_t_sq * factor)


class SusceptibilityReport(Record):
    chi1_p: complex
    chi1_t: complex
    chi3_p: complex
    chi3_t: complex
    chi1_unit: str = "dimensionless"
    chi3_unit: str = "m^2/V^2"


# =============================================================================
# PROPAGATION
# =============================================================================

class GroupVelocities(Record):
    """Group velocities in m/s"""

    vg_p: float
    vg_t: float


class PhaseTable(Record):
    """Phases in radians; phi_conditional is assembled from the two nonlinear shifts"""

    phi0_p: float
    phi0_t: float
    phi_lin_p: float
    phi_lin_t: float
    phi_nlin_p: float
    phi_nlin_t: float

    @computed_field
    @property
    def phi_conditional(self) -> float:
        return self.phi_nlin_p + self.phi_nlin_t


class PolarizationMargin(Record):
    """Zeeman splitting over the half transparency window"""

    ratio: float
    window: float
    valid: bool


# =============================================================================
# GATE
# =============================================================================

class PolarizationQubit(Record):
    a_plus: complex
    a_minus: complex

    @model_validator(mode="after")
    def _normalized(self):
        norm = abs(self.a_plus) ** 2 + abs(self.a_minus) ** 2
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise ValueError(f"qubit is not normalized: |a+|^2 + |a-|^2 = {norm!r}")
        return self


class TwoQubitState(Record):
    """Amplitudes over (|s-s->, |s-s+>, |s+s+>, |s+s->), probe first"""

    amplitudes: Tuple[complex, complex, complex, complex]

    @model_validator(mode="after")
    def _normalized(self):
        norm = sum(abs(a) ** 2 for a in self.amplitudes)
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise ValueError(f"two-qubit state is not normalized: norm = {norm!r}")
        return self

    @property
    def mm(self) -> complex:
        return self.amplitudes[0]

    @property
    def mp(self) -> complex:
        return self.amplitudes[1]

    @property
    def pp(self) -> complex:
        return self.amplitudes[2]

    @property
    def pm(self) -> complex:
        return self.amplitudes[3]


class TruthTable(Record):
    """Row phases of the gate, same basis order as TwoQubitState"""

    theta_mm: float
    theta_mp: float
    theta_pp: float
    theta_pm: float

    @computed_field
    @property
    def conditional_phase(self) -> float:
        return self.theta_pm + self.theta_mp - self.theta_pp - self.theta_mm

    def rows(self) -> Tuple[float, float, float, float]:
        return (self.theta_mm, self.theta_mp, self.theta_pp, self.theta_pm)


class UniversalityReport(Record):
    universal: bool
    witness: float
    conditional_phase: float


# =============================================================================
# ORACLE
# =============================================================================

class DensityMatrix4(Record):
    """Density matrix over |0> (excited) and the ground sublevels |1>, |2>, |3>"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    rho: np.ndarray

    @field_validator("rho", mode="before")
    @classmethod
    def _as_complex(cls, value):
        return np.array(value, dtype=complex)

    @model_validator(mode="after")
    def _physical(self):
        rho = self.rho
        if rho.shape != (4, 4):
            raise UnphysicalStateError(f"{UNPHYSICAL_STATE_ERROR}: shape {rho.shape}")
        if np.max(np.abs(rho - rho.conj().T)) > STATE_TOLERANCE:
            raise UnphysicalStateError(f"{UNPHYSICAL_STATE_ERROR}: not Hermitian")
        if abs(np.trace(rho) - 1.0) > STATE_TOLERANCE:
            raise UnphysicalStateError(f"{UNPHYSICAL_STATE_ERROR}: trace {np.trace(rho)}")
        populations = rho.diagonal().real
        if np.any(populations < -STATE_TOLERANCE) or np.any(populations > 1 + STATE_TOLERANCE):
            raise UnphysicalStateError(f"{UNPHYSICAL_STATE_ERROR}: populations {populations}")
        rho.setflags(write=False)
        return self

    def populations(self) -> np.ndarray:
        return self.rho.diagonal().real.copy()

    def coherence(self, row: int, col: int) -> complex:
        return complex(self.rho[row, col])


class ChiExtraction(Record):
    chi1_est: complex
    chi3_est: complex
    fit_residual: float
    calibration: complex


class OracleRow(Record):
    """One detuning point of the analytic-versus-oracle comparison"""

    beam: str
    detuning: float
    chi1_analytic: complex
    chi1_oracle: complex
    chi3_analytic: complex
    chi3_oracle: complex
    fit_residual: float
    chi3_ratio_analytic: complex
    chi3_ratio_oracle: complex

    @property
    def ratio_error_re(self) -> float:
        return _relative(self.chi3_ratio_oracle.real, self.chi3_ratio_analytic.real)

    @property
    def ratio_error_im(self) -> float:
        return _relative(self.chi3_ratio_oracle.imag, self.chi3_ratio_analytic.imag)


def _relative(value: float, reference: float) -> float:
    if reference == 0:
        return 0.0 if value == 0 else math.inf
    return abs(value - reference) / abs(reference)


# =============================================================================
# SEARCH
# =============================================================================

class SearchResult(Record):
    """Solution of a single-unknown design search"""

    parameter: str
    value: float
    phi: float
    monotone: bool
    evaluations: int
