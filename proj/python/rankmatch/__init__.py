"""Rank and matching computations for affine spaces of matrices over GF(p).

Matrices are lists of rows of integers. Graph vertices and edges are 1-based:
an edge is a pair ``(i, j)`` and a loop is ``(i,)``.
"""

import json

from ._core import (
    DomainError,
    Error,
    HypothesisViolation,
    ParseError,
    Space,
    TooLarge,
    det,
    max_matching,
    mu,
    nu,
    pfaffian,
    pfaffian_combinatorial,
    rank,
    run_cli,
    u_a,
    u_s,
    verify_json,
)

SUITES = ("counterexamples", "thm1", "thm2", "cor3", "thm4", "thm5", "erdos-gallai")


def verify(suite, **params):
    """Run a verification suite and return its report as a dict."""
    return json.loads(verify_json(suite, **params))


def load_space(path):
    with open(path, encoding="utf-8") as fh:
        return Space.parse(fh.read())


__all__ = [
    "DomainError",
    "Error",
    "HypothesisViolation",
    "ParseError",
    "SUITES",
    "Space",
    "TooLarge",
    "det",
    "load_space",
    "max_matching",
    "mu",
    "nu",
    "pfaffian",
    "pfaffian_combinatorial",
    "rank",
    "run_cli",
    "u_a",
    "u_s",
    "verify",
    "verify_json",
]
