#!/usr/bin/env python3
"""
Errors - Exception hierarchy shared by the services and the command line
"""

from .constants import (
    DISPERSION_ERROR,
    FIT_ERROR,
    ILL_CONDITIONED_ERROR,
    NO_BRACKET_ERROR,
    NO_WINDOW_ERROR,
    PERTURBATIVITY_ERROR,
    POLE_ERROR,
    SINGULAR_STATE_ERROR,
)


class TripodError(Exception):
    """Base class; exit_code is what the command line returns for it"""

    exit_code = 1


class ConfigError(TripodError):
    exit_code = 1


# =============================================================================
# PHYSICS ERRORS
# =============================================================================

class PhysicsError(TripodError):
    exit_code = 2


class PoleError(PhysicsError):
    def __init__(self, denominator: str, magnitude: float):
        self.denominator = denominator
        self.magnitude = magnitude
        super().__init__(f"{POLE_ERROR}: |{denominator}| = {magnitude:.3g}")


class DispersionError(PhysicsError):
    def __init__(self, beam: str, velocity: float):
        self.beam = beam
        self.velocity = velocity
        super().__init__(f"{DISPERSION_ERROR}: {beam} v_g = {velocity:.6g} m/s")


class NoWindowError(PhysicsError):
    def __init__(self, beam: str):
        self.beam = beam
        super().__init__(f"{NO_WINDOW_ERROR} for the {beam} beam")


class SingularSteadyStateError(PhysicsError):
    def __init__(self, detail: str = ""):
        super().__init__(f"{SINGULAR_STATE_ERROR}{': ' + detail if detail else ''}")


class IllConditionedError(PhysicsError):
    def __init__(self, condition: float):
        self.condition = condition
        super().__init__(f"{ILL_CONDITIONED_ERROR}: cond = {condition:.3g}")


class FitError(PhysicsError):
    def __init__(self, residual: float):
        self.residual = residual
        super().__init__(f"{FIT_ERROR}: {residual:.3g}")


class PerturbativityError(PhysicsError):
    def __init__(self, name: str, value: float, limit: float):
        super().__init__(f"{PERTURBATIVITY_ERROR}: {name} = {value:g} > {limit:g}")


class UnphysicalStateError(PhysicsError):
    pass


# =============================================================================
# SEARCH ERRORS
# =============================================================================

class SearchError(TripodError):
    exit_code = 3


class NoBracketError(SearchError):
    def __init__(self, target: float, reached: float, bound: float):
        self.target = target
        self.reached = reached
        self.bound = bound
        super().__init__(
            f"{NO_BRACKET_ERROR}: phi({bound:g}) = {reached:.6g} rad < target {target:.6g} rad"
        )


class NonMonotoneWarning(UserWarning):
    pass
