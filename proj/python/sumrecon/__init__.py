"""Bounds and Monte Carlo simulation for common sum reconstruction over a DSBS."""

import json as _json

from ._core import (
    CapacityError,
    ConstructionError,
    bconv,
    binary_entropy,
    bound_curves,
    code_info,
    inverse_binary_entropy,
    lower_convex_envelope,
    membership,
    min_weight_solve,
    quantize,
    rate_cr,
    run_experiment_json,
)

__version__ = "0.1.0"


def run_experiment(config, threads=0):
    """Run a Monte Carlo experiment from a config dict and return the report dict."""
    return _json.loads(run_experiment_json(_json.dumps(config), threads))


__all__ = [
    "CapacityError",
    "ConstructionError",
    "bconv",
    "binary_entropy",
    "bound_curves",
    "code_info",
    "inverse_binary_entropy",
    "lower_convex_envelope",
    "membership",
    "min_weight_solve",
    "quantize",
    "rate_cr",
    "run_experiment",
    "run_experiment_json",
]
