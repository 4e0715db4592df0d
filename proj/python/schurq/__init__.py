"""Exact Alladi-Schur polynomials, their reduced quotients and coefficient tables.

Polynomials cross the boundary as lists of ``(xdeg, qdeg, coeff)`` tuples in
ascending (xdeg, qdeg) order, with Python ints for the coefficients.
"""

import json

from ._core import (
    DivisionFailure,
    Engine,
    alladi_schur_holds,
    check_tags,
    from_json,
    oracle_d,
    p_index,
    to_json,
    to_text,
)

__all__ = [
    "DivisionFailure",
    "Engine",
    "alladi_schur_holds",
    "check_tags",
    "from_json",
    "oracle_d",
    "p_index",
    "to_json",
    "to_text",
    "verify",
]


def verify(checks=None, *, max_n=60, max_c=10, max_weight=40, max_oracle=30, engine=None):
    """Run identity checks and return the parsed report."""
    engine = engine or Engine()
    return json.loads(engine.verify_json(checks, max_n, max_c, max_weight, max_oracle))
