#!/usr/bin/env python3
"""
Search Service - solve for the length or density giving a target conditional
phase, and run parameter sweeps
"""

import logging
import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, Optional

import numpy as np
import pandas as pd
from pydantic import ValidationError
from scipy import optimize

from ..constants import (
    DENSITY_BRACKET,
    LENGTH_BRACKET,
    MONOTONE_SAMPLES,
    NEGATIVE_TARGET,
    NON_FINITE_TARGET,
    NON_MONOTONE_WARNING,
    ROOT_ERROR,
    ROOT_TOLERANCE,
    SWEEP_WORKERS,
)
from ..errors import (
    ConfigError,
    DispersionError,
    NoBracketError,
    NonMonotoneWarning,
    NoWindowError,
    PoleError,
    SearchError,
)
from ..models import Beam, IndexConvention, Overlap, SearchResult, SweepSpec, TripodParams
from .gate import build_truth_table, is_universal
from .propagation import phase_table, transparency_window
from .susceptibility import susceptibility_report

logger = logging.getLogger(__name__)


# =============================================================================
# ROOT FINDING
# =============================================================================

def conditional_phase(p: TripodParams, overlap: Overlap = Overlap.MATCHED) -> float:
    return phase_table(p, overlap).phi_conditional


def _solve_for(
    p: TripodParams, parameter: str, target_phi: float, upper: float, overlap: Overlap
) -> SearchResult:
    if not math.isfinite(target_phi):
        raise ConfigError(f"{NON_FINITE_TARGET}: {target_phi}")
    if target_phi < 0:
        raise ConfigError(f"{NEGATIVE_TARGET}: {target_phi}")
    if target_phi == 0:
        return SearchResult(parameter=parameter, value=0.0, phi=0.0, monotone=True, evaluations=0)

    evaluations = 0

    def phi(value: float) -> float:
        nonlocal evaluations
        evaluations += 1
        return conditional_phase(p.replace(**{parameter: value}), overlap)

    samples = np.array([phi(v) for v in np.linspace(0.0, upper, MONOTONE_SAMPLES)])
    if samples[-1] < target_phi:
        raise NoBracketError(target_phi, float(samples[-1]), upper)
    monotone = bool(np.all(np.diff(samples) >= 0))
    if not monotone:
        warnings.warn(f"{NON_MONOTONE_WARNING} [0, {upper:g}] of {parameter}", NonMonotoneWarning)

    # bracket on the first sample at or above the target
    index = int(np.argmax(samples >= target_phi))
    step = upper / (MONOTONE_SAMPLES - 1)
    low, high = step * (index - 1), step * index
    if samples[index] == target_phi:
        root = high
    else:
        root = optimize.brentq(
            lambda v: phi(v) - target_phi, low, high, xtol=max(high * 1e-17, 1e-300), maxiter=500
        )
    reached = phi(root)
    if abs(reached - target_phi) >= ROOT_TOLERANCE:
        raise SearchError(f"{ROOT_ERROR}: |phi - target| = {abs(reached - target_phi):.3g}")
    logger.info("%s = %.12g reaches phi = %.12g in %d evaluations", parameter, root, reached, evaluations)
    return SearchResult(
        parameter=parameter, value=float(root), phi=reached, monotone=monotone, evaluations=evaluations
    )


def find_length(
    p: TripodParams,
    target_phi: float,
    overlap: Overlap = Overlap.MATCHED,
    l_max: float = LENGTH_BRACKET,
) -> SearchResult:
    return _solve_for(p, "length", target_phi, l_max, overlap)


def find_density(
    p: TripodParams,
    target_phi: float,
    overlap: Overlap = Overlap.MATCHED,
    n_max: float = DENSITY_BRACKET,
) -> SearchResult:
    return _solve_for(p, "density", target_phi, n_max, overlap)


# =============================================================================
# SWEEPS
# =============================================================================

UNIT_FIELDS = {"chi1_unit", "chi3_unit"}

ERROR_STATUS: Dict[type, str] = {
    PoleError: "pole_error",
    DispersionError: "dispersion_error",
}

SWEEP_COLUMNS = [
    "index", "value", "status",
    "chi1_p_re", "chi1_p_im", "chi1_t_re", "chi1_t_im",
    "chi3_p_re", "chi3_p_im", "chi3_t_re", "chi3_t_im",
    "phi_nlin_p", "phi_nlin_t", "phi_conditional", "window", "witness",
]


def evaluate_point(
    p: TripodParams,
    overlap: Overlap = Overlap.MATCHED,
    convention: IndexConvention = IndexConvention.SI,
) -> Dict[str, float]:
    """Full pipeline at one parameter point, flattened to real columns"""
    report = susceptibility_report(p)
    table = phase_table(p, overlap, convention)
    witness = is_universal(build_truth_table(table)).witness
    try:
        window = transparency_window(p, Beam.PROBE)
    except NoWindowError:
        window = math.nan
    row = {}
    for name, value in report.model_dump(exclude=UNIT_FIELDS).items():
        row[f"{name}_re"] = value.real
        row[f"{name}_im"] = value.imag
    row.update(
        phi_nlin_p=table.phi_nlin_p,
        phi_nlin_t=table.phi_nlin_t,
        phi_conditional=table.phi_conditional,
        window=window,
        witness=witness,
    )
    return row


def _sweep_row(
    p: TripodParams, spec: SweepSpec, index: int, value: float, overlap: Overlap
) -> Dict[str, object]:
    row: Dict[str, object] = {"index": index, "value": value, "status": "ok"}
    try:
        row.update(evaluate_point(p.replace(**{spec.parameter: value}), overlap))
    except ValidationError:
        row["status"] = "invalid"
    except (PoleError, DispersionError) as exc:
        logger.debug("sweep point %d (%s = %g): %s", index, spec.parameter, value, exc)
        row["status"] = ERROR_STATUS[type(exc)]
    return row


def sweep(
    p: TripodParams,
    spec: SweepSpec,
    overlap: Overlap = Overlap.MATCHED,
    workers: Optional[int] = None,
) -> pd.DataFrame:
    """One row per grid point, ordered by grid index; failed points keep their row"""
    grid = spec.grid()
    workers = workers or SWEEP_WORKERS
    task: Callable[[int], Dict[str, object]] = lambda i: _sweep_row(p, spec, i, float(grid[i]), overlap)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(task, range(grid.size)))
    else:
        rows = [task(i) for i in range(grid.size)]
    logger.info("swept %s over %d points with %d workers", spec.parameter, grid.size, workers)
    return pd.DataFrame(rows, columns=SWEEP_COLUMNS)
