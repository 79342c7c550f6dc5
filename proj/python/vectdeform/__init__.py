"""Exact checks for deformations of Vect(S^1) into Poisson algebras of Laurent series.

Command functions mirror the ``vectdeform`` CLI subcommands and return the
report as a dict with keys ``command``, ``inputs``, ``verdict``, ``details``
and ``engine_version``. Scalars are passed and returned as strings such as
``"1/2*lambda^2 - 1/2*mu^2"``.
"""

import json as _json

from . import _vectdeform as _core
from ._vectdeform import (
    Error,
    InsufficientDepth,
    UsageError,
    casimir,
    engine_version,
    formal_coefficient,
    gelfand_fuks,
    integrability_lhs,
    normalize,
    universal_coefficient,
)

EXIT_CODES = {"pass": 0, "erratum_detected": 0, "fail": 2, "obstruction": 3}


def _report(raw):
    return _json.loads(raw)


def verify_homomorphism(map="standard", params="", symbolic=False, window=4, floor=-6, order=4, table=None):
    """Check {pi(L_m), pi(L_n)} = pi([L_m, L_n]) for |m|, |n| <= window down to grade floor."""
    if table is not None and not isinstance(table, str):
        table = _json.dumps(table)
    return _report(_core.verify_homomorphism(map, params, symbolic, window, floor, order, table))


def solve_recursion(params="", symbolic=False, universal=None, K=5):
    return _report(_core.solve_recursion(params, symbolic, universal, K))


def check_integrability(params="", symbolic=False, universal=None):
    return _report(_core.check_integrability(params, symbolic, universal))


def formal_solve(params="", symbolic=False, universal=None, order=3, slots=None, lambda_family=False):
    """slots maps (k, j) with j in {1, 2} to a scalar string."""
    return _report(_core.formal_solve(params, symbolic, universal, order, dict(slots or {}), lambda_family))


def cocycle_report(which=(0, 1, 2), window=6):
    return _report(_core.cocycle_report(list(which), window))


def coboundary_search(which=-1, shift=None, window=6, grade_min=-3, grade_max=1, derivative_cap=4):
    if shift is not None and not isinstance(shift, str):
        shift = _json.dumps(shift)
    return _report(_core.coboundary_search(which, shift, window, grade_min, grade_max, derivative_cap))


def moment_map(params="", symbolic=False):
    return _report(_core.moment_map(params, symbolic))


def central_extension(params="", symbolic=False, depth=3, max_m=3):
    return _report(_core.central_extension(params, symbolic, depth, max_m))


def report_errata():
    return _report(_core.report_errata())


__all__ = [
    "EXIT_CODES",
    "Error",
    "InsufficientDepth",
    "UsageError",
    "casimir",
    "central_extension",
    "check_integrability",
    "coboundary_search",
    "cocycle_report",
    "engine_version",
    "formal_coefficient",
    "formal_solve",
    "gelfand_fuks",
    "integrability_lhs",
    "moment_map",
    "normalize",
    "report_errata",
    "solve_recursion",
    "universal_coefficient",
    "verify_homomorphism",
]
