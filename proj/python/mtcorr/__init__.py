"""Exact multi-time correlation and fluctuation computations.

Thin wrapper over the native ``_mtcorr`` extension: dynamical-system models
with exact states, asymptotic (time-averaged) states on free-product words,
finite-N fluctuation moments and ergodic-hierarchy condition checks.
"""

from _mtcorr import (
    Model,
    catalan,
    crossing_number,
    gaussian_moment,
    load_model,
    model_from_json,
    pair_partitions,
    semicircle_moment,
)

__all__ = [
    "Model",
    "catalan",
    "crossing_number",
    "gaussian_moment",
    "load_model",
    "model_from_json",
    "pair_partitions",
    "semicircle_moment",
]
