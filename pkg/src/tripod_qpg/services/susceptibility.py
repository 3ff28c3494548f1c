#!/usr/bin/env python3
"""
Susceptibility Service - complex detunings, dipole moments and the linear and
cross-Kerr susceptibilities of the tripod medium

All inputs are gamma-scaled; the conversion to SI happens once, in the
prefactors below.
"""

import logging
import math
from typing import Optional, Union

import numpy as np

from ..constants import C_LIGHT, EPSILON_0, HBAR, POLE_THRESHOLD
from ..errors import PoleError
from ..models import Beam, ComplexDetunings, DipoleMoments, SusceptibilityReport, TripodParams

logger = logging.getLogger(__name__)

ArrayOrScalar = Union[complex, np.ndarray]


# =============================================================================
# DETUNINGS AND DIPOLES
# =============================================================================

def complex_detunings(p: TripodParams) -> ComplexDetunings:
    """D_j0 = delta_j + i gamma_j0, D_kj = delta_j - delta_k - i gamma_kj"""
    return ComplexDetunings(
        d10=complex(p.delta1, p.gamma_10),
        d30=complex(p.delta3, p.gamma_30),
        d12=complex(p.delta2 - p.delta1, -p.gamma_12),
        d13=complex(p.delta3 - p.delta1, -p.gamma_13),
        d23=complex(p.delta3 - p.delta2, -p.gamma_23),
    )


def _dipole_sq(wavelength: float, gamma_si: float) -> float:
    # radiative population decay is twice the coherence decay
    omega = 2.0 * math.pi * C_LIGHT / wavelength
    return 3.0 * math.pi * EPSILON_0 * HBAR * C_LIGHT**3 * (2.0 * gamma_si) / omega**3


def dipole_from_linewidth(p: TripodParams) -> DipoleMoments:
    return DipoleMoments(
        mu_p_sq=_dipole_sq(p.lambda_p, p.gamma_si),
        mu_t_sq=_dipole_sq(p.lambda_t, p.gamma_si),
    )


# =============================================================================
# GAMMA-SCALED RESPONSE
# =============================================================================

def _guard(denominator: ArrayOrScalar, name: str) -> None:
    magnitude = float(np.min(np.abs(denominator)))
    if magnitude < POLE_THRESHOLD:
        raise PoleError(name, magnitude)


def _lambda_response(d_j0: ArrayOrScalar, d_kj: ArrayOrScalar, omega_c: float, name: str):
    """d_kj / (d_j0 d_kj - |W|^2), the EIT response of one Lambda subsystem"""
    denominator = d_j0 * d_kj - omega_c**2
    _guard(denominator, name)
    return d_kj / denominator


def _probe_response(d: ComplexDetunings, omega_c: float) -> complex:
    return _lambda_response(d.d10, d.d12, omega_c, "D10*D12 - |W|^2")


def _trigger_response(d: ComplexDetunings, omega_c: float) -> complex:
    return _lambda_response(d.d30, d.d23.conjugate(), omega_c, "D30*conj(D23) - |W|^2")


def _probe_kerr(d: ComplexDetunings, omega_c: float) -> complex:
    _guard(d.d13, "D13")
    probe = _probe_response(d, omega_c)
    trigger = _lambda_response(d.d30.conjugate(), d.d23, omega_c, "conj(D30)*D23 - |W|^2")
    denominator = d.d10 * d.d12 - omega_c**2
    return 0.5 * (d.d12 / d.d13) / denominator * (probe + trigger)


def _trigger_kerr(d: ComplexDetunings, omega_c: float) -> complex:
    _guard(d.d13, "D13")
    trigger = _trigger_response(d, omega_c)
    probe = _lambda_response(
        d.d10.conjugate(), d.d12.conjugate(), omega_c, "conj(D10)*conj(D12) - |W|^2"
    )
    denominator = d.d30 * d.d23.conjugate() - omega_c**2
    return 0.5 * (d.d23.conjugate() / d.d13.conjugate()) / denominator * (probe + trigger)


# =============================================================================
# SI SUSCEPTIBILITIES
# =============================================================================

def _linear_prefactor(p: TripodParams, mu_sq: float) -> float:
    return p.density * mu_sq / (HBAR * EPSILON_0) / p.gamma_si


def _kerr_prefactor(p: TripodParams, mu: DipoleMoments) -> float:
    return p.density * mu.mu_p_sq * mu.mu_t_sq / (HBAR**3 * EPSILON_0) / p.gamma_si**3


def chi1_probe(p: TripodParams, dipoles: Optional[DipoleMoments] = None) -> complex:
    mu = dipoles or dipole_from_linewidth(p)
    return _linear_prefactor(p, mu.mu_p_sq) * _probe_response(complex_detunings(p), p.omega_c)


def chi1_trigger(p: TripodParams, dipoles: Optional[DipoleMoments] = None) -> complex:
    mu = dipoles or dipole_from_linewidth(p)
    return _linear_prefactor(p, mu.mu_t_sq) * _trigger_response(complex_detunings(p), p.omega_c)


def chi3_probe(p: TripodParams, dipoles: Optional[DipoleMoments] = None) -> complex:
    """Cross-Kerr susceptibility of the probe in m^2/V^2, multiplying |E_T|^2"""
    mu = dipoles or dipole_from_linewidth(p)
    return _kerr_prefactor(p, mu) * _probe_kerr(complex_detunings(p), p.omega_c)


def chi3_trigger(p: TripodParams, dipoles: Optional[DipoleMoments] = None) -> complex:
    """Cross-Kerr susceptibility of the trigger in m^2/V^2, multiplying |E_P|^2"""
    mu = dipoles or dipole_from_linewidth(p)
    return _kerr_prefactor(p, mu) * _trigger_kerr(complex_detunings(p), p.omega_c)


def chi1(p: TripodParams, beam: Beam, dipoles: Optional[DipoleMoments] = None) -> complex:
    return chi1_probe(p, dipoles) if beam == Beam.PROBE else chi1_trigger(p, dipoles)


def chi3(p: TripodParams, beam: Beam, dipoles: Optional[DipoleMoments] = None) -> complex:
    return chi3_probe(p, dipoles) if beam == Beam.PROBE else chi3_trigger(p, dipoles)


def susceptibility_report(
    p: TripodParams, dipoles: Optional[DipoleMoments] = None
) -> SusceptibilityReport:
    mu = dipoles or dipole_from_linewidth(p)
    report = SusceptibilityReport(
        chi1_p=chi1_probe(p, mu),
        chi1_t=chi1_trigger(p, mu),
        chi3_p=chi3_probe(p, mu),
        chi3_t=chi3_trigger(p, mu),
    )
    logger.debug("susceptibilities: %s", report)
    return report


# =============================================================================
# DETUNING SCANS
# =============================================================================

def chi1_scan(p: TripodParams, beam: Beam, detunings: np.ndarray) -> np.ndarray:
    """Linear susceptibility with the beam's own detuning replaced by each grid value"""
    mu = dipole_from_linewidth(p)
    detunings = np.asarray(detunings, dtype=float)
    if beam == Beam.PROBE:
        d10 = detunings + 1j * p.gamma_10
        d12 = (p.delta2 - detunings) - 1j * p.gamma_12
        response = _lambda_response(d10, d12, p.omega_c, "D10*D12 - |W|^2")
        return _linear_prefactor(p, mu.mu_p_sq) * response
    d30 = detunings + 1j * p.gamma_30
    d23 = (detunings - p.delta2) - 1j * p.gamma_23
    response = _lambda_response(d30, np.conj(d23), p.omega_c, "D30*conj(D23) - |W|^2")
    return _linear_prefactor(p, mu.mu_t_sq) * response


def bare_scan(p: TripodParams, beam: Beam, detunings: np.ndarray) -> np.ndarray:
    """Two-level response 1/D_j0 without the coupling field, gamma units"""
    rate = p.gamma_10 if beam == Beam.PROBE else p.gamma_30
    return 1.0 / (np.asarray(detunings, dtype=float) + 1j * rate)
