"""
Tests for group velocities, pulse overlap, phase shifts and the transparency window
"""

import math

import hypothesis.strategies as st
from hypothesis import given, settings
from pytest import approx, mark, raises

from tripod_qpg.constants import C_LIGHT
from tripod_qpg.errors import DispersionError, NoWindowError
from tripod_qpg.models import Beam, GroupVelocities, IndexConvention, Overlap
from tripod_qpg.services.propagation import (
    erf_over_zeta,
    group_index,
    group_velocities,
    group_velocity,
    phase_table,
    phi_linear,
    phi_nonlinear,
    phi_vacuum,
    transparency_window,
    wrong_polarization_check,
    zeta,
)

MATCHED = GroupVelocities(vg_p=C_LIGHT, vg_t=C_LIGHT)


# =============================================================================
# PULSE OVERLAP
# =============================================================================

def test_erf_over_zeta_limit():
    assert erf_over_zeta(0.0) == 2.0 / math.sqrt(math.pi)
    assert erf_over_zeta(1e-4) == approx(1.1283791670955126 * (1 - 1e-8 / 3), rel=1e-12)
    assert erf_over_zeta(1.0) == approx(0.8427007929497149, rel=1e-12)
    assert erf_over_zeta(50.0) == approx(1 / 50, rel=1e-12)


def test_erf_over_zeta_continuous_at_cutoff():
    below, above = erf_over_zeta(0.999999e-3), erf_over_zeta(1.000001e-3)
    assert below == approx(above, rel=1e-10)


@settings(deadline=None)
@given(st.floats(-20.0, 20.0, allow_nan=False))
def test_erf_over_zeta_even_and_bounded(z):
    value = erf_over_zeta(z)
    assert value == erf_over_zeta(-z)
    assert 0 < value <= 2.0 / math.sqrt(math.pi)


def test_zeta(quantum):
    assert zeta(quantum, MATCHED, Beam.PROBE) == 0.0
    assert zeta(quantum, MATCHED, Beam.TRIGGER) == 0.0

    p = quantum.replace(length=1.0)
    slow = GroupVelocities(vg_p=C_LIGHT / 2, vg_t=C_LIGHT)
    expected = 0.5 * math.sqrt(2.0) / (C_LIGHT / 2 * p.tau_t)
    assert zeta(p, slow, Beam.PROBE) == approx(expected, rel=1e-12)

    swapped = GroupVelocities(vg_p=slow.vg_t, vg_t=slow.vg_p)
    assert zeta(p, swapped, Beam.PROBE) == approx(-zeta(p, slow, Beam.PROBE), rel=1e-12)


# =============================================================================
# GROUP VELOCITY
# =============================================================================

def test_trigger_group_velocity(quantum):
    assert group_index(quantum, Beam.TRIGGER) == approx(1.2571349267e8, rel=1e-8)
    assert group_velocity(quantum, Beam.TRIGGER) == approx(2.3847277777, rel=1e-8)


def test_group_index_converges_with_step(quantum):
    coarse = group_index(quantum, Beam.TRIGGER)
    fine = group_index(quantum, Beam.TRIGGER, step=5e-4)
    extrapolated = (4 * fine - coarse) / 3
    assert abs(coarse - extrapolated) / extrapolated < 1e-3


def test_slow_light_speeds_up_with_coupling(quantum):
    slow = group_velocity(quantum, Beam.TRIGGER)
    faster = group_velocity(quantum.replace(omega_c=2.0), Beam.TRIGGER)
    assert 0 < slow < faster < C_LIGHT


def test_dilute_medium_is_luminal(quantum):
    assert group_velocity(quantum.replace(density=0.0), Beam.TRIGGER) == C_LIGHT
    assert group_velocity(quantum.replace(density=1e-3), Beam.TRIGGER) == approx(C_LIGHT, rel=1e-12)


def test_anomalous_probe_dispersion_rejected(quantum):
    with raises(DispersionError) as info:
        group_velocity(quantum, Beam.PROBE)
    assert info.value.beam == "probe"
    with raises(DispersionError):
        group_velocities(quantum, Overlap.DISPERSIVE)


def test_matched_overlap_skips_dispersion(quantum):
    assert group_velocities(quantum, Overlap.MATCHED) == MATCHED


# =============================================================================
# PHASES
# =============================================================================

def test_vacuum_phase(quantum):
    assert phi_vacuum(quantum.replace(length=0.0), Beam.PROBE) == 0.0
    one_wave = quantum.replace(length=quantum.lambda_p)
    assert phi_vacuum(one_wave, Beam.PROBE) == approx(2 * math.pi, rel=1e-12)
    assert phi_vacuum(quantum, Beam.TRIGGER) == approx(1.288462074681e4, rel=1e-9)


def test_linear_phase(quantum):
    shift_p = phi_linear(quantum, Beam.PROBE) - phi_vacuum(quantum, Beam.PROBE)
    shift_t = phi_linear(quantum, Beam.TRIGGER) - phi_vacuum(quantum, Beam.TRIGGER)
    assert shift_p == approx(66.88111484827, rel=1e-9)
    assert shift_t == approx(-165.8905512959, rel=1e-9)


def test_linear_phase_without_atoms_or_on_dark_resonance(quantum, dark_probe):
    empty = quantum.replace(density=0.0)
    for beam in Beam:
        assert phi_linear(empty, beam) == phi_vacuum(empty, beam)
    assert phi_linear(dark_probe, Beam.PROBE) == phi_vacuum(dark_probe, Beam.PROBE)


def test_gaussian_index_convention(quantum):
    si = phi_linear(quantum, Beam.PROBE, IndexConvention.SI) - phi_vacuum(quantum, Beam.PROBE)
    gaussian = phi_linear(quantum, Beam.PROBE, IndexConvention.GAUSSIAN) - phi_vacuum(quantum, Beam.PROBE)
    assert gaussian == approx(4 * math.pi * si, rel=1e-9)


def test_nonlinear_phase(quantum):
    assert phi_nonlinear(quantum, MATCHED, Beam.PROBE) == approx(-3.054686666717, rel=1e-9)
    assert phi_nonlinear(quantum, MATCHED, Beam.TRIGGER) == approx(3.581882974594, rel=1e-9)
    assert phi_nonlinear(quantum.replace(omega_t=0.0), MATCHED, Beam.PROBE) == 0.0
    assert phi_nonlinear(quantum.replace(omega_p=0.0), MATCHED, Beam.TRIGGER) == 0.0


@mark.parametrize("field,factor", [("length", 3.0), ("density", 0.25)])
def test_nonlinear_phase_is_linear_in_length_and_density(quantum, field, factor):
    base = phase_table(quantum)
    scaled = phase_table(quantum.replace(**{field: factor * getattr(quantum, field)}))
    assert scaled.phi_conditional == approx(factor * base.phi_conditional, rel=1e-12)


def test_phase_tables(quantum, classical, gas_cell):
    table = phase_table(quantum)
    assert table.phi_conditional == table.phi_nlin_p + table.phi_nlin_t
    assert table.phi_conditional == approx(0.5271963078769, rel=1e-9)
    assert phase_table(classical).phi_conditional == approx(6.128887331336e-2, rel=1e-9)
    assert phase_table(gas_cell).phi_conditional == approx(0.2188888332620, rel=1e-9)


def test_conditional_phase_independent_of_index_convention(quantum):
    si = phase_table(quantum, convention=IndexConvention.SI)
    gaussian = phase_table(quantum, convention=IndexConvention.GAUSSIAN)
    assert si.phi_conditional == gaussian.phi_conditional
    assert si.phi_lin_p != gaussian.phi_lin_p


def test_zero_length_phases(quantum):
    table = phase_table(quantum.replace(length=0.0))
    assert all(value == 0.0 for value in table.model_dump().values())


# =============================================================================
# TRANSPARENCY WINDOW
# =============================================================================

def test_probe_transparency_window(quantum):
    width = transparency_window(quantum, Beam.PROBE)
    analytic = 2 * math.sqrt(quantum.omega_c**2 * quantum.gamma_12 / quantum.gamma_10 - quantum.gamma_12**2)
    assert width == approx(0.199, abs=1e-9)
    assert abs(width - analytic) <= 2e-3


def test_window_opens_with_coupling(quantum):
    assert transparency_window(quantum.replace(omega_c=2.0), Beam.PROBE) > transparency_window(
        quantum, Beam.PROBE
    )


def test_no_window(quantum):
    with raises(NoWindowError):
        transparency_window(quantum, Beam.TRIGGER)
    with raises(NoWindowError):
        transparency_window(quantum.replace(gamma_kj=(0.0, 0.01, 0.01)), Beam.PROBE)


def test_wrong_polarization_margin(quantum):
    margin = wrong_polarization_check(quantum)
    assert margin.window == approx(0.199, abs=1e-9)
    assert margin.ratio == approx(20.0 / 0.0995, rel=1e-9)
    assert margin.valid

    doubled = wrong_polarization_check(quantum.replace(zeeman_split=40.0))
    assert doubled.ratio == approx(2 * margin.ratio, rel=1e-12)

    degenerate = wrong_polarization_check(quantum.replace(zeeman_split=0.0))
    assert degenerate.ratio == 0.0
    assert not degenerate.valid
