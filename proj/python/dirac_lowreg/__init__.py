"""Time integrators for the 1D nonlinear Dirac and Dirac-Poisson equations."""

import json

from ._core import (
    evolve,
    fit_order,
    rough_data,
    run_study,
    schemes,
    smooth_profile,
    sobolev_norm,
)

__all__ = [
    "evolve",
    "fit_order",
    "rough_data",
    "run_study",
    "run_study_config",
    "schemes",
    "smooth_profile",
    "sobolev_norm",
]


def run_study_config(**config):
    """Keyword form of run_study; keys match the JSON study config."""
    return run_study(json.dumps(config))
