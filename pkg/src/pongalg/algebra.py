"""Product and differential shared by the pong and asteroids algebras.

Both algebras use the same rules on generators; they only differ in the
symmetry group behind crossings and weights.  A generator type must provide
``m``, ``domain_idempotent``, ``image_idempotent``, ``weight`` (doubled),
``crossings``, ``cross``, ``resolve`` and ``compose``.
"""

from __future__ import annotations

from functools import lru_cache

from .polynomial import Element, Monomial, mono_mul


class WeightBookkeepingError(AssertionError):
    """A correction monomial came out negative or half-integral."""


def correction_monomial(before: tuple[int, ...], after: tuple[int, ...], context) -> Monomial:
    """Exponents ``(before - after) / 2`` for doubled weight vectors."""
    out = []
    for b, a in zip(before, after):
        diff = b - a
        if diff < 0 or diff % 2:
            raise WeightBookkeepingError(
                f"weight drop {tuple(x - y for x, y in zip(before, after))}/2 "
                f"is not a monomial exponent; operands: {context}"
            )
        out.append(diff // 2)
    return tuple(out)


@lru_cache(maxsize=None)
def mu2_gen(f, g) -> tuple | None:
    """``(monomial, g o f)`` or None when the product vanishes."""
    h = f.compose(g)
    if h is None or h.cross < f.cross + g.cross:
        return None
    total = tuple(a + b for a, b in zip(f.weight, g.weight))
    return correction_monomial(total, h.weight, (f, g)), h


@lru_cache(maxsize=None)
def diff_gen(f) -> tuple:
    """Surviving differential terms of a generator as ``(monomial, resolution)``."""
    out = []
    for c in f.crossings:
        h = f.resolve(c)
        if h.cross == f.cross - 1:
            out.append((correction_monomial(f.weight, h.weight, (f, c)), h))
    return tuple(out)


def mu2(a: Element, b: Element) -> Element:
    """Bilinear product; on generators the first argument acts first."""
    out = Element()
    for f, p in a.terms.items():
        for g, q in b.terms.items():
            res = mu2_gen(f, g)
            if res is None:
                continue
            mono, h = res
            for x in p:
                for y in q:
                    out.iadd_term(h, mono_mul(mono_mul(x, y), mono))
    return out


def diff(a: Element) -> Element:
    out = Element()
    for f, p in a.terms.items():
        for mono, h in diff_gen(f):
            for x in p:
                out.iadd_term(h, mono_mul(x, mono))
    return out


def maslov(f) -> int:
    """Relative grading: the crossing count."""
    return f.cross


def weight_of_term(f, mono: Monomial) -> tuple[int, ...]:
    """Doubled weight of ``mono * f``."""
    return tuple(w + 2 * e for w, e in zip(f.weight, mono))
