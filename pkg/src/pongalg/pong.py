"""The pong algebra P(m, k) over F_2[v_1, ..., v_m].

Only the differential and the product are exposed: the algebra has no higher
operations, so nothing else belongs on this interface.
"""

from __future__ import annotations

from .algebra import diff, maslov, mu2, weight_of_term
from .core import LiftedPermutation, check_context, enumerate_generators, idempotent_states
from .polynomial import Element

__all__ = [
    "diff",
    "element",
    "enumerate_generators",
    "idempotent",
    "idempotent_states",
    "maslov",
    "mu2",
    "weight_of_term",
]


def idempotent(m: int, state) -> LiftedPermutation:
    state = tuple(sorted(state))
    check_context(m, len(state))
    return LiftedPermutation.identity(m, state)


def element(*gens, mono=None) -> Element:
    """Sum of generators, each with the same monomial coefficient (default 1)."""
    out = Element()
    for g in gens:
        out.iadd_term(g, tuple(mono) if mono is not None else (0,) * g.m)
    return out
