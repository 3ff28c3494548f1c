#!/usr/bin/env python3
"""
Propagation Service - group velocities, pulse overlap, phase shifts and the
EIT transparency window
"""

import logging
import math
from typing import Optional

import numpy as np
from scipy.special import erf

from ..constants import (
    C_LIGHT,
    DISPERSION_STEP,
    ERF_SERIES_CUTOFF,
    HBAR,
    LUMINAL_TOLERANCE,
    POLARIZATION_MARGIN,
    WINDOW_HALF_SPAN,
    WINDOW_RESOLUTION,
)
from ..errors import DispersionError, NoWindowError
from ..models import (
    Beam,
    DipoleMoments,
    GroupVelocities,
    IndexConvention,
    Overlap,
    PhaseTable,
    PolarizationMargin,
    TripodParams,
)
from .susceptibility import bare_scan, chi1, chi1_scan, chi3, dipole_from_linewidth

logger = logging.getLogger(__name__)

TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)


def wavelength(p: TripodParams, beam: Beam) -> float:
    return p.lambda_p if beam == Beam.PROBE else p.lambda_t


def wavenumber(p: TripodParams, beam: Beam) -> float:
    return 2.0 * math.pi / wavelength(p, beam)


def _detuning_field(beam: Beam) -> str:
    return "delta1" if beam == Beam.PROBE else "delta3"


# =============================================================================
# GROUP VELOCITY
# =============================================================================

def group_index(p: TripodParams, beam: Beam, step: float = DISPERSION_STEP) -> float:
    """
    n_g = 1 + Re chi/2 + (omega/2) dRe chi/domega, with the derivative taken
    by central difference in the beam detuning. delta = omega_0 - omega_j - omega_L,
    so d(delta)/d(omega_L) = -1.
    """
    name = _detuning_field(beam)
    centre = getattr(p, name)
    upper = chi1(p.replace(**{name: centre + step}), beam).real
    lower = chi1(p.replace(**{name: centre - step}), beam).real
    slope = -(upper - lower) / (2.0 * step) / p.gamma_si
    omega = wavenumber(p, beam) * C_LIGHT
    return 1.0 + chi1(p, beam).real / 2.0 + omega / 2.0 * slope


def group_velocity(p: TripodParams, beam: Beam) -> float:
    index = group_index(p, beam)
    if index <= 0:
        raise DispersionError(beam.value, C_LIGHT / index if index else math.inf)
    velocity = C_LIGHT / index
    if velocity > C_LIGHT * (1.0 + LUMINAL_TOLERANCE):
        raise DispersionError(beam.value, velocity)
    return min(velocity, C_LIGHT)


def group_velocities(p: TripodParams, overlap: Overlap = Overlap.MATCHED) -> GroupVelocities:
    if overlap == Overlap.MATCHED:
        return GroupVelocities(vg_p=C_LIGHT, vg_t=C_LIGHT)
    velocities = GroupVelocities(
        vg_p=group_velocity(p, Beam.PROBE), vg_t=group_velocity(p, Beam.TRIGGER)
    )
    logger.debug("group velocities: %s", velocities)
    return velocities


# =============================================================================
# PULSE OVERLAP
# =============================================================================

def zeta(p: TripodParams, vg: GroupVelocities, beam: Beam) -> float:
    if beam == Beam.PROBE:
        return (1.0 - vg.vg_p / vg.vg_t) * math.sqrt(2.0) * p.length / (vg.vg_p * p.tau_t)
    return (1.0 - vg.vg_t / vg.vg_p) * math.sqrt(2.0) * p.length / (vg.vg_t * p.tau_p)


def erf_over_zeta(z: float) -> float:
    """erf(z)/z, continued to 2/sqrt(pi) at z = 0"""
    a = abs(z)
    if a < ERF_SERIES_CUTOFF:
        a2 = a * a
        return TWO_OVER_SQRT_PI * (1.0 - a2 / 3.0 + a2 * a2 / 10.0)
    return float(erf(a)) / a


# =============================================================================
# PHASES
# =============================================================================

def phi_vacuum(p: TripodParams, beam: Beam) -> float:
    return wavenumber(p, beam) * p.length


def phi_linear(
    p: TripodParams,
    beam: Beam,
    convention: IndexConvention = IndexConvention.SI,
    dipoles: Optional[DipoleMoments] = None,
) -> float:
    susceptibility = chi1(p, beam, dipoles).real
    if convention == IndexConvention.GAUSSIAN:
        index = 1.0 + 2.0 * math.pi * susceptibility
    else:
        index = 1.0 + susceptibility / 2.0
    return wavenumber(p, beam) * p.length * index


def phi_nonlinear(
    p: TripodParams,
    vg: GroupVelocities,
    beam: Beam,
    dipoles: Optional[DipoleMoments] = None,
) -> float:
    """Cross-phase of one beam driven by the other beam's Gaussian pulse"""
    mu = dipoles or dipole_from_linewidth(p)
    if beam == Beam.PROBE:
        other_rabi, other_mu_sq = p.omega_t, mu.mu_t_sq
    else:
        other_rabi, other_mu_sq = p.omega_p, mu.mu_p_sq
    # (hbar |W|)^2 / (4 |mu|^2) = |E|^2 / 4
    intensity = math.pi**1.5 * HBAR**2 * (other_rabi * p.gamma_si) ** 2 / (4.0 * other_mu_sq)
    overlap = erf_over_zeta(zeta(p, vg, beam))
    return wavenumber(p, beam) * p.length * intensity * overlap * chi3(p, beam, mu).real


def phase_table(
    p: TripodParams,
    overlap: Overlap = Overlap.MATCHED,
    convention: IndexConvention = IndexConvention.SI,
    dipoles: Optional[DipoleMoments] = None,
) -> PhaseTable:
    mu = dipoles or dipole_from_linewidth(p)
    vg = group_velocities(p, overlap)
    table = PhaseTable(
        phi0_p=phi_vacuum(p, Beam.PROBE),
        phi0_t=phi_vacuum(p, Beam.TRIGGER),
        phi_lin_p=phi_linear(p, Beam.PROBE, convention, mu),
        phi_lin_t=phi_linear(p, Beam.TRIGGER, convention, mu),
        phi_nlin_p=phi_nonlinear(p, vg, Beam.PROBE, mu),
        phi_nlin_t=phi_nonlinear(p, vg, Beam.TRIGGER, mu),
    )
    logger.debug("phase table (%s, %s): %s", overlap.value, convention.value, table)
    return table


# =============================================================================
# TRANSPARENCY WINDOW
# =============================================================================

def transparency_window(p: TripodParams, beam: Beam) -> float:
    """
    Full width (gamma units) of the band around two-photon resonance where the
    absorption of the bare transition is cancelled, i.e. Im chi has the opposite
    sign to the two-level response 1/D_j0.
    """
    half = int(round(WINDOW_HALF_SPAN / WINDOW_RESOLUTION))
    grid = p.delta2 + WINDOW_RESOLUTION * np.arange(-half, half + 1)
    response = chi1_scan(p, beam, grid)
    cancelled = response.imag * bare_scan(p, beam, grid).imag < 0
    if not cancelled[half]:
        raise NoWindowError(beam.value)

    outside_left = np.flatnonzero(~cancelled[:half])
    outside_right = np.flatnonzero(~cancelled[half:])
    lo = outside_left[-1] + 1 if outside_left.size else 0
    hi = half + outside_right[0] - 1 if outside_right.size else grid.size - 1
    width = (hi - lo + 1) * WINDOW_RESOLUTION
    logger.debug("%s transparency window: %.6g gamma", beam.value, width)
    return float(width)


def wrong_polarization_check(p: TripodParams) -> PolarizationMargin:
    window = transparency_window(p, Beam.PROBE)
    ratio = p.zeeman_split / (window / 2.0)
    return PolarizationMargin(ratio=ratio, window=window, valid=bool(ratio >= POLARIZATION_MARGIN))
