#!/usr/bin/env python3
"""
Gate Service - polarization phase-gate truth table, gate action and entanglement
"""

import math

import numpy as np

from ..constants import UNIVERSALITY_TOLERANCE
from ..models import PhaseTable, PolarizationQubit, TruthTable, TwoQubitState, UniversalityReport

BALANCED = PolarizationQubit(a_plus=1 / math.sqrt(2.0), a_minus=1 / math.sqrt(2.0))


def build_truth_table(pt: PhaseTable, trigger_populated: bool = True) -> TruthTable:
    """
    Row phases for |s-s->, |s-s+>, |s+s+>, |s+s->. With trigger_populated=False
    level |3> holds no atoms and the s-s- trigger only picks up its vacuum phase.
    """
    trigger_minus = pt.phi_lin_t if trigger_populated else pt.phi0_t
    return TruthTable(
        theta_mm=pt.phi0_p + trigger_minus,
        theta_mp=pt.phi0_p + pt.phi0_t,
        theta_pp=pt.phi_lin_p + pt.phi0_t,
        theta_pm=(pt.phi_lin_p + pt.phi_nlin_p) + (trigger_minus + pt.phi_nlin_t),
    )


def apply_gate(in_p: PolarizationQubit, in_t: PolarizationQubit, tt: TruthTable) -> TwoQubitState:
    product = np.array(
        [
            in_p.a_minus * in_t.a_minus,
            in_p.a_minus * in_t.a_plus,
            in_p.a_plus * in_t.a_plus,
            in_p.a_plus * in_t.a_minus,
        ],
        dtype=complex,
    )
    phased = product * np.exp(-1j * np.array(tt.rows()))
    return TwoQubitState(amplitudes=tuple(complex(a) for a in phased))


def concurrence(s: TwoQubitState) -> float:
    """Pure-state concurrence 2|a(--) a(++) - a(-+) a(+-)|"""
    return float(min(1.0, 2.0 * abs(s.mm * s.pp - s.mp * s.pm)))


def is_universal(tt: TruthTable) -> UniversalityReport:
    phi = tt.conditional_phase
    reduced = math.remainder(phi, 2.0 * math.pi)
    witness = concurrence(apply_gate(BALANCED, BALANCED, tt))
    return UniversalityReport(
        universal=abs(reduced) > UNIVERSALITY_TOLERANCE,
        witness=witness,
        conditional_phase=phi,
    )
