#!/usr/bin/env python3
"""
Oracle Service - steady state of the four-level tripod master equation and
weak-field extraction of effective susceptibilities

The density matrix is vectorized row-major, so rho[a, b] sits at index 4*a + b
and vec(A rho B) = kron(A, B.T) vec(rho).
"""

import logging
import math
from typing import List, Optional, Sequence

import numpy as np
from scipy import linalg

from ..constants import (
    FIT_RESIDUAL_LIMIT,
    HBAR,
    ILL_CONDITIONED_LIMIT,
    ORACLE_DETUNING_OFFSETS,
    ORACLE_SCAN_FRACTIONS,
    ORACLE_SCAN_MAX,
    ORACLE_WEAK_FIELD,
    PERTURBATIVE_LIMIT,
    PREPARED_POPULATIONS,
    RABI_COUPLING,
    SINGULAR_LIMIT,
)
from ..errors import (
    ConfigError,
    FitError,
    IllConditionedError,
    PerturbativityError,
    SingularSteadyStateError,
)
from ..models import Beam, ChiExtraction, DensityMatrix4, OracleRow, TripodParams
from .susceptibility import chi1, chi3, dipole_from_linewidth

logger = logging.getLogger(__name__)

LEVELS = 4
POPULATION_INDICES = (0, 5, 10, 15)
GROUND_PAIRS = ((1, 2), (1, 3), (2, 3))


# =============================================================================
# MASTER EQUATION
# =============================================================================

def hamiltonian(p: TripodParams) -> np.ndarray:
    """Rotating-frame H/hbar in units of gamma"""
    h = np.zeros((LEVELS, LEVELS), dtype=complex)
    h[1, 1], h[2, 2], h[3, 3] = -p.delta1, -p.delta2, -p.delta3
    for level, rabi in ((1, p.omega_p), (2, p.omega_c), (3, p.omega_t)):
        h[0, level] = h[level, 0] = RABI_COUPLING * rabi
    return h


def liouvillian(p: TripodParams) -> np.ndarray:
    identity = np.eye(LEVELS)
    h = hamiltonian(p)
    generator = -1j * (np.kron(h, identity) - np.kron(identity, h.T))

    # spontaneous decay |0> -> |j>, branching 2 gamma_j0 / 3 per channel
    for level, rate in zip((1, 2, 3), p.gamma_j0):
        jump = np.zeros((LEVELS, LEVELS))
        jump[level, 0] = math.sqrt(2.0 * rate / 3.0)
        loss = jump.T @ jump
        generator += np.kron(jump, jump) - 0.5 * (np.kron(loss, identity) + np.kron(identity, loss.T))

    # pure dephasing of ground coherences
    for (k, j), rate in zip(GROUND_PAIRS, p.gamma_kj):
        generator[LEVELS * k + j, LEVELS * k + j] -= rate
        generator[LEVELS * j + k, LEVELS * j + k] -= rate
    return generator


def _solve(system: np.ndarray, rhs: np.ndarray) -> np.ndarray:
    singular_values = linalg.svdvals(system)
    smallest = singular_values[-1]
    condition = singular_values[0] / smallest if smallest > 0 else math.inf
    logger.debug("steady-state condition number: %.3g", condition)
    if condition > SINGULAR_LIMIT:
        raise SingularSteadyStateError(f"condition number {condition:.3g}")
    if condition > ILL_CONDITIONED_LIMIT:
        raise IllConditionedError(condition)
    return linalg.solve(system, rhs)


def steady_state(p: TripodParams) -> DensityMatrix4:
    """Closed-system steady state, trace condition in place of the rho_00 equation"""
    if p.omega_p == 0 and p.omega_c == 0 and p.omega_t == 0:
        raise SingularSteadyStateError("all Rabi frequencies are zero")
    system = liouvillian(p)
    system[0, :] = 0.0
    system[0, list(POPULATION_INDICES)] = 1.0
    rhs = np.zeros(LEVELS * LEVELS, dtype=complex)
    rhs[0] = 1.0
    return DensityMatrix4(rho=_solve(system, rhs).reshape(LEVELS, LEVELS))


def pinned_state(
    p: TripodParams, populations: Sequence[float] = PREPARED_POPULATIONS
) -> DensityMatrix4:
    """Steady coherences with the level populations held at a prepared distribution"""
    system = liouvillian(p)
    rhs = np.zeros(LEVELS * LEVELS, dtype=complex)
    for index, population in zip(POPULATION_INDICES, populations):
        system[index, :] = 0.0
        system[index, index] = 1.0
        rhs[index] = population
    return DensityMatrix4(rho=_solve(system, rhs).reshape(LEVELS, LEVELS))


def residual_norm(p: TripodParams, state: DensityMatrix4) -> float:
    return float(np.linalg.norm(liouvillian(p) @ state.rho.ravel()))


# =============================================================================
# SUSCEPTIBILITY EXTRACTION
# =============================================================================

def _check_fields(weak_field: float, scan_max: float) -> None:
    if weak_field <= 0:
        raise ConfigError("weak field must be strictly positive")
    if scan_max < 0:
        raise ConfigError("scan amplitude must be non-negative")
    for name, value in (("weak field", weak_field), ("scan amplitude", scan_max)):
        if value > PERTURBATIVE_LIMIT:
            raise PerturbativityError(name, value, PERTURBATIVE_LIMIT)


def _weak_response(p: TripodParams, beam: Beam, weak_field: float, scan: float) -> complex:
    """rho_j0 per unit weak Rabi frequency with the other beam at amplitude scan"""
    if beam == Beam.PROBE:
        state = pinned_state(p.replace(omega_p=weak_field, omega_t=scan))
        return state.coherence(1, 0) / weak_field
    state = pinned_state(p.replace(omega_t=weak_field, omega_p=scan))
    return state.coherence(3, 0) / weak_field


def calibrate(reference: TripodParams, beam: Beam, weak_field: float = ORACLE_WEAK_FIELD) -> complex:
    """Single constant mapping the oracle's linear response onto chi1 at the reference point"""
    response = _weak_response(reference, beam, weak_field, 0.0)
    if response == 0:
        raise FitError(math.inf)
    constant = chi1(reference, beam) / response
    logger.info("%s calibration constant: %s", beam.value, constant)
    return constant


def extract_chi(
    p: TripodParams,
    beam: Beam,
    weak_field: float = ORACLE_WEAK_FIELD,
    scan_max: float = ORACLE_SCAN_MAX,
    calibration: Optional[complex] = None,
) -> ChiExtraction:
    """Fit chi_eff = chi1 + chi3 |E_scan|^2 over a weak scan of the other beam"""
    _check_fields(weak_field, scan_max)
    if calibration is None:
        calibration = calibrate(p, beam, weak_field)

    scan = scan_max * np.array(ORACLE_SCAN_FRACTIONS) if scan_max > 0 else np.zeros(1)
    response = calibration * np.array([_weak_response(p, beam, weak_field, t) for t in scan])
    if scan.size == 1:
        return ChiExtraction(
            chi1_est=complex(response[0]), chi3_est=0j, fit_residual=0.0, calibration=calibration
        )

    design = np.column_stack([np.ones_like(scan), scan**2]).astype(complex)
    coefficients, *_ = np.linalg.lstsq(design, response, rcond=None)
    scale = np.linalg.norm(response)
    misfit = np.linalg.norm(response - design @ coefficients)
    residual = float(misfit / scale) if scale > 0 else 0.0
    if residual > FIT_RESIDUAL_LIMIT:
        raise FitError(residual)

    # |E|^2 per unit (gamma-scaled) Rabi frequency squared of the scanned beam
    mu = dipole_from_linewidth(p)
    scanned_mu_sq = mu.mu_t_sq if beam == Beam.PROBE else mu.mu_p_sq
    field_sq = (HBAR * p.gamma_si) ** 2 / scanned_mu_sq
    return ChiExtraction(
        chi1_est=complex(coefficients[0]),
        chi3_est=complex(coefficients[1]) / field_sq,
        fit_residual=residual,
        calibration=calibration,
    )


def _ratio(value: complex, reference: complex) -> complex:
    return value / reference if reference != 0 else complex(math.nan, math.nan)


def oracle_check(
    p: TripodParams,
    weak_field: float = ORACLE_WEAK_FIELD,
    scan_max: float = ORACLE_SCAN_MAX,
) -> List[OracleRow]:
    """
    Analytic versus extracted susceptibilities over three detunings of each beam:
    the configured one and two points further from two-photon resonance. Ratios are
    taken against the configured point, where the calibration is fixed.
    """
    _check_fields(weak_field, scan_max)
    rows: List[OracleRow] = []
    for beam in (Beam.PROBE, Beam.TRIGGER):
        name = "delta1" if beam == Beam.PROBE else "delta3"
        detunings = [getattr(p, name)] + [p.delta2 + offset for offset in ORACLE_DETUNING_OFFSETS]
        calibration = calibrate(p, beam, weak_field)
        points = [p.replace(**{name: detuning}) for detuning in detunings]
        extracted = [extract_chi(q, beam, weak_field, scan_max, calibration) for q in points]
        analytic = [chi3(q, beam) for q in points]
        for detuning, q, ex, an in zip(detunings, points, extracted, analytic):
            rows.append(
                OracleRow(
                    beam=beam.value,
                    detuning=detuning,
                    chi1_analytic=chi1(q, beam),
                    chi1_oracle=ex.chi1_est,
                    chi3_analytic=an,
                    chi3_oracle=ex.chi3_est,
                    fit_residual=ex.fit_residual,
                    chi3_ratio_analytic=_ratio(an, analytic[0]),
                    chi3_ratio_oracle=_ratio(ex.chi3_est, extracted[0].chi3_est),
                )
            )
    return rows
