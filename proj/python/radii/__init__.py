"""Radius constants for classes of analytic functions with fixed second coefficient."""

import json

from ._core import (
    RadiiError,
    boundary_point,
    compute_radius,
    contains,
    delta,
    disc_bound,
    inclusion_radius,
    lemma2_condition,
    mccarty_lower,
    mccarty_upper,
    region_names,
    sharpness_residual,
    theorem_coefficients,
)
from . import _core

__all__ = [
    "RadiiError",
    "boundary_point",
    "compute_radius",
    "contains",
    "delta",
    "disc_bound",
    "inclusion_radius",
    "lemma2_condition",
    "mccarty_lower",
    "mccarty_upper",
    "region_names",
    "sharpness_residual",
    "theorem_coefficients",
    "verify_crosscheck",
    "verify_lemmas",
    "verify_tightness",
]


def verify_lemmas(samples, seed, scale=1.0):
    return json.loads(_core._verify_lemmas(samples, seed, scale))


def verify_crosscheck(grid_size, seed):
    return json.loads(_core._verify_crosscheck(grid_size, seed))


def verify_tightness(region, cls, b, c, q, margin=0.01, alpha=None):
    return json.loads(_core._verify_tightness(region, cls, b, c, q, margin, alpha))
