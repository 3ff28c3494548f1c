#!/usr/bin/env python3
"""
Constants - Physical constants, numerical thresholds and error messages
"""

# Standard library imports
import math
import os

from dotenv import load_dotenv
from scipy import constants as codata

# Load environment variables from .env file
load_dotenv()

# =============================================================================
# PHYSICAL CONSTANTS (CODATA, SI)
# =============================================================================

HBAR = codata.hbar
EPSILON_0 = codata.epsilon_0
C_LIGHT = codata.c

# =============================================================================
# ATOMIC DEFAULTS (87Rb D2 line)
# =============================================================================

# Optical coherence decay rate, the frequency unit of every gamma-scaled input
GAMMA_SI = 2.0 * math.pi * 3.03e6
WAVELENGTH = 780.24e-9
PULSE_DURATION = 1.0e-6
DEPHASING = 1.0e-2
ZEEMAN_SPLIT = 20.0

# Off-diagonal Hamiltonian element per unit Rabi frequency in the oracle
RABI_COUPLING = 1.0

# Prepared ground populations for oracle extraction: half the atoms in |1>, half in |3>
PREPARED_POPULATIONS = (0.0, 0.5, 0.0, 0.5)

# =============================================================================
# NUMERICAL THRESHOLDS
# =============================================================================

# Susceptibility poles (gamma-scaled denominators)
POLE_THRESHOLD = 1.0e-12

# Group velocity
DISPERSION_STEP = 1.0e-3
LUMINAL_TOLERANCE = 1.0e-12

# erf(z)/z switches to its Taylor series below this |z|
ERF_SERIES_CUTOFF = 1.0e-3

# Transparency window scan
WINDOW_HALF_SPAN = 5.0
WINDOW_RESOLUTION = 1.0e-3

# Wrong-polarization margin below which the gate is flagged invalid
POLARIZATION_MARGIN = 10.0

# Gate
UNIVERSALITY_TOLERANCE = 1.0e-6
NORM_TOLERANCE = 1.0e-12

# Steady state
ILL_CONDITIONED_LIMIT = 1.0e12
SINGULAR_LIMIT = 1.0e15
STATE_TOLERANCE = 1.0e-10

# Oracle extraction
FIT_RESIDUAL_LIMIT = 1.0e-6
PERTURBATIVE_LIMIT = 0.05
ORACLE_WEAK_FIELD = 0.01
ORACLE_SCAN_MAX = 0.02
ORACLE_SCAN_FRACTIONS = (0.0, 0.25, 0.5, 1.0)
ORACLE_DETUNING_OFFSETS = (0.2, 0.5)

# Design search
ROOT_TOLERANCE = 1.0e-9
LENGTH_BRACKET = 1.0
DENSITY_BRACKET = 1.0e22
MONOTONE_SAMPLES = 33

# =============================================================================
# OUTPUT CONFIGURATION
# =============================================================================

SIGNIFICANT_DIGITS = 12
FLOAT_FORMAT = f"%.{SIGNIFICANT_DIGITS}g"
LOG_FORMAT = "%(asctime)s [%(levelname)s] %(message)s"

# Sweep worker threads (from environment variables)
SWEEP_WORKERS = int(os.getenv("TRIPOD_QPG_SWEEP_WORKERS", "4"))

# =============================================================================
# ERROR MESSAGES
# =============================================================================

# Configuration Error Messages
CONFIG_READ_ERROR = "Could not read config file"
CONFIG_PARSE_ERROR = "Malformed JSON config"
CONFIG_FIELD_ERROR = "Invalid config field"
UNKNOWN_PRESET = "Unknown preset"
NEGATIVE_TARGET = "Target phase must be non-negative"
NON_FINITE_TARGET = "Target phase must be a finite number"

# Physics Error Messages
POLE_ERROR = "Susceptibility pole"
DISPERSION_ERROR = "Non-physical group velocity"
NO_WINDOW_ERROR = "No transparency window"
SINGULAR_STATE_ERROR = "Steady state is not unique"
ILL_CONDITIONED_ERROR = "Steady-state system is ill-conditioned"
FIT_ERROR = "Susceptibility fit residual too large"
PERTURBATIVITY_ERROR = "Field too strong for weak-field extraction"
UNPHYSICAL_STATE_ERROR = "Density matrix violates physical constraints"

# Search Error Messages
NO_BRACKET_ERROR = "Target phase not reachable within bracket"
ROOT_ERROR = "Root finder did not reach the phase tolerance"
NON_MONOTONE_WARNING = "Conditional phase is not monotone on the bracket"
