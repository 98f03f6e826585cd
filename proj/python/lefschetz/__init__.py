"""Python access to the lefschetz core library. Structured results are returned as dicts."""

import json

from . import _core
from ._core import LefschetzError, cyclicity_bound, pullback_cyclicity

__all__ = [
    "LefschetzError",
    "best_factorization",
    "bound_report",
    "cyclicity_bound",
    "decompose",
    "default_scenario",
    "error_detail",
    "gram",
    "kernel_report",
    "pullback_cyclicity",
    "simplicity",
    "tangent_cone",
    "validate",
]


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def error_detail(err):
    """Decode the JSON payload of a LefschetzError."""
    return json.loads(str(err))


def default_scenario(a, n):
    return json.loads(_core.default_scenario(a, n))


def validate(scenario):
    return json.loads(_core.validate(_dump(scenario)))


def gram(scenario, which):
    return json.loads(_core.gram(_dump(scenario), which))


def kernel_report(scenario):
    return json.loads(_core.kernel_report(_dump(scenario)))


def simplicity(scenario):
    return json.loads(_core.simplicity(_dump(scenario)))


def decompose(form, l):
    return json.loads(_core.decompose(_dump(form), _dump(l)))


def tangent_cone(form, scenario):
    return json.loads(_core.tangent_cone(_dump(form), _dump(scenario)))


def bound_report(a, n):
    return json.loads(_core.bound_report(a, n))


def best_factorization(d_plus_1):
    return json.loads(_core.best_factorization(d_plus_1))
