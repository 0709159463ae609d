"""Sparse polynomials over F_2[v_1, ..., v_m] and free modules over them.

A monomial is a tuple of exponents.  A polynomial is a frozenset of monomials
(coefficient 1 when present), so addition is symmetric difference.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping

Monomial = tuple[int, ...]
Polynomial = frozenset


def one(m: int) -> Monomial:
    return (0,) * m


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def poly_mul(p: frozenset, q: frozenset) -> frozenset:
    out: set = set()
    for a in p:
        for b in q:
            out ^= {mono_mul(a, b)}
    return frozenset(out)


def poly_str(p: frozenset) -> str:
    if not p:
        return "0"
    terms = []
    for mono in sorted(p):
        factors = [
            f"v{i + 1}" if e == 1 else f"v{i + 1}^{e}" for i, e in enumerate(mono) if e
        ]
        terms.append("*".join(factors) or "1")
    return " + ".join(terms)


class Element:
    """A finite F_2[v]-linear combination of generators.

    Generators are any hashable, orderable values; the algebra modules decide
    what they are.  Terms with a zero coefficient are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Hashable, Iterable[Monomial]] | None = None):
        self.terms: dict = {}
        if terms:
            for gen, monos in terms.items():
                poly = frozenset()
                for mono in monos:
                    poly ^= {tuple(mono)}
                if poly:
                    self.terms[gen] = frozenset(poly)

    @classmethod
    def monomial(cls, gen, mono: Monomial) -> Element:
        return cls({gen: [mono]})

    @classmethod
    def generator(cls, gen) -> Element:
        return cls({gen: [one(gen.m)]})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, Element) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: Element) -> Element:
        out = Element()
        out.terms = dict(self.terms)
        for gen, poly in other.terms.items():
            new = out.terms.get(gen, frozenset()) ^ poly
            if new:
                out.terms[gen] = new
            else:
                out.terms.pop(gen, None)
        return out

    __sub__ = __add__

    def iadd_term(self, gen, mono: Monomial) -> None:
        """In-place ``self += mono * gen``."""
        new = self.terms.get(gen, frozenset()) ^ {mono}
        if new:
            self.terms[gen] = new
        else:
            del self.terms[gen]

    def scale(self, poly: frozenset) -> Element:
        out = Element()
        for gen, p in self.terms.items():
            q = poly_mul(p, poly)
            if q:
                out.terms[gen] = q
        return out

    def items(self):
        """Terms in canonical order: generator, then sorted monomials."""
        for gen in sorted(self.terms):
            yield gen, sorted(self.terms[gen])

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({poly_str(frozenset(p))})*{g!r}" for g, p in self.items())
