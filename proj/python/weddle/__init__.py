"""Level-3 theta, Burkhardt and Weddle computations (C++ core)."""

import json

from ._core import (
    ConfigError,
    Error,
    ParseError,
    ResourceError,
    UnsupportedDomain,
    base_locus_count,
    characteristic_orbits,
    derive_burkhardt,
    gamma_index,
    group_order,
    stabilizer_order,
    steinerian_minus,
    theta,
    verify_heisenberg,
    weddle_curve,
    weddle_from_theta,
)
from . import _core

DEFAULT_POINT_CAP = 20_000_000


def fiber_census(p, k=1, cap=DEFAULT_POINT_CAP):
    """Fiber-size histogram of St_- over P^3(F_{p^k})."""
    return json.loads(_core._fiber_census(p, k, cap))


def run_suite(suites="all", seed=1, p=101, tol=1e-6, omega=None, roots=(0, 1, 2, 3, 4, 5), cap=DEFAULT_POINT_CAP):
    """Run check suites; returns the JSON report as a dict."""
    return json.loads(_core._run_suite(suites, seed, p, tol, omega, list(roots), cap))


__all__ = [
    "ConfigError",
    "Error",
    "ParseError",
    "ResourceError",
    "UnsupportedDomain",
    "base_locus_count",
    "characteristic_orbits",
    "derive_burkhardt",
    "fiber_census",
    "gamma_index",
    "group_order",
    "run_suite",
    "stabilizer_order",
    "steinerian_minus",
    "theta",
    "verify_heisenberg",
    "weddle_curve",
    "weddle_from_theta",
]
