"""Checks for smoothability of simple normal crossing complex surfaces.

Thin convenience layer over the compiled core: JSON strings coming out of the
C++ side are decoded, and keyword arguments are forwarded as scenario
parameters (for example ``check("fujita", k=2)``).
"""

import json

from ._core import SncError, charts, list_scenarios, validate
from ._core import check as _check
from ._core import plan as _plan
from ._core import scenario_json as _scenario_json

__all__ = [
    "SncError",
    "charts",
    "check",
    "list_scenarios",
    "plan",
    "scenario",
    "validate",
]


def _params(kwargs):
    return {key: str(value) for key, value in kwargs.items()}


def scenario(ref, **params):
    """Canonical scenario dictionary for a built-in name or raw JSON text."""
    return json.loads(_scenario_json(ref, _params(params)))


def check(ref, **params):
    """Full smoothability report as a dictionary; ``exit_code`` mirrors the CLI."""
    return json.loads(_check(ref, _params(params)))


def plan(ref):
    """Minimal trivializing blow-up plan, or the obstructing curve."""
    return json.loads(_plan(ref))
