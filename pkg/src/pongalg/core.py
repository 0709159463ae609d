"""Lifted partial permutations under the infinite dihedral group G_m.

G_m is generated by the reflections of the line at 1/2 and at m - 1/2.  It
acts freely on the integers, and every element can be written uniquely as
``x -> s*x + (1 - s)/2 + n*(2m - 2)`` with ``s`` in {+1, -1}.  A lifted
partial permutation is determined by its values on the representatives
{1, ..., m-1}; everything else is recovered by equivariance.

Half-integers (the levels j - 1/2 carrying the O markings) are passed around
in doubled form, i.e. as odd integers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, NamedTuple


class DomainError(ValueError):
    """Raised when a point is outside the G_m-closure of a permutation's domain."""


class InvalidGenerator(ValueError):
    pass


def check_context(m: int, k: int) -> None:
    if m < 2:
        raise InvalidGenerator(f"pong needs m >= 2, got m={m}")
    if not 1 <= k <= m - 1:
        raise InvalidGenerator(f"pong needs 1 <= k <= m-1, got m={m}, k={k}")


class GroupElement(NamedTuple):
    """``x -> sign*x + (1 - sign)/2 + shift*(2m - 2)``."""

    sign: int
    shift: int

    def apply(self, m: int, x: int) -> int:
        return self.sign * x + (1 - self.sign) // 2 + self.shift * (2 * m - 2)

    def apply_doubled(self, m: int, x2: int) -> int:
        """Action on a doubled coordinate (``x2 = 2x``)."""
        return self.sign * x2 + (1 - self.sign) + self.shift * (4 * m - 4)

    def compose(self, other: GroupElement) -> GroupElement:
        """``self o other`` (apply ``other`` first)."""
        return GroupElement(self.sign * other.sign, self.shift + self.sign * other.shift)

    def inverse(self) -> GroupElement:
        return GroupElement(self.sign, -self.sign * self.shift)

    @property
    def is_identity(self) -> bool:
        return self.sign == 1 and self.shift == 0


IDENTITY = GroupElement(1, 0)


def reflection(m: int, center2: int) -> GroupElement:
    """The reflection ``x -> center2 - x`` about the half-integer ``center2/2``.

    Only reflections in G_m are accepted: ``center2`` must be congruent to 1
    modulo 2m - 2.
    """
    period = 2 * m - 2
    if (center2 - 1) % period:
        raise ValueError(f"reflection about {center2}/2 is not in G_{m}")
    return GroupElement(-1, (center2 - 1) // period)


def translation(n: int) -> GroupElement:
    return GroupElement(1, n)


def group_apply(g: GroupElement, x: int, m: int) -> int:
    return g.apply(m, x)


def decompose(m: int, x: int) -> tuple[int, GroupElement]:
    """Write ``x = g . r`` with ``r`` in {1, ..., m-1}; both are unique."""
    period = 2 * m - 2
    t = x % period
    if 1 <= t <= m - 1:
        return t, GroupElement(1, (x - t) // period)
    r = (1 - x) % period
    return r, GroupElement(-1, (x - 1 + r) // period)


def q1(m: int, x: int) -> int:
    return decompose(m, x)[0]


def q2(m: int, h2: int) -> int:
    """Index in {1, ..., m} of the O marking at the doubled half-integer ``h2``."""
    if h2 % 2 != 1:
        raise ValueError(f"{h2}/2 is not a half-integer")
    period = 2 * m - 2
    j = (h2 + 1) // 2
    for i in range(1, m + 1):
        if (i - j) % period == 0 or (i - 2 + j) % period == 0:
            return i
    raise AssertionError("unreachable")


class Crossing(NamedTuple):
    i: int
    j: int


@dataclass(frozen=True, order=True)
class LiftedPermutation:
    """A pong generator, stored by its values on the domain representatives.

    ``domain`` is a strictly increasing tuple in {1, ..., m-1} and
    ``values[t]`` is the image of ``domain[t]``.
    """

    m: int
    domain: tuple[int, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "domain", tuple(self.domain))
        object.__setattr__(self, "values", tuple(self.values))
        m = self.m
        check_context(m, len(self.domain))
        if len(self.values) != len(self.domain):
            raise InvalidGenerator("domain and values differ in length")
        if any(not 1 <= x <= m - 1 for x in self.domain):
            raise InvalidGenerator(f"domain {self.domain} not inside 1..{m - 1}")
        if any(a >= b for a, b in zip(self.domain, self.domain[1:])):
            raise InvalidGenerator(f"domain {self.domain} not strictly increasing")
        if len({q1(m, v) for v in self.values}) != len(self.values):
            raise InvalidGenerator(f"values {self.values} are not injective mod G_{m}")

    def __hash__(self):
        # generators key every memo table; hashing must stay cheap
        try:
            return self.__dict__["_hash"]
        except KeyError:
            h = hash((self.m, self.domain, self.values))
            self.__dict__["_hash"] = h
            return h

    @property
    def k(self) -> int:
        return len(self.domain)

    @classmethod
    def from_map(cls, m: int, mapping: dict[int, int]) -> LiftedPermutation:
        dom = tuple(sorted(mapping))
        return cls(m, dom, tuple(mapping[x] for x in dom))

    @classmethod
    def identity(cls, m: int, state) -> LiftedPermutation:
        state = tuple(sorted(state))
        return cls(m, state, state)

    def __repr__(self):
        pairs = ", ".join(f"{x}->{v}" for x, v in zip(self.domain, self.values))
        return f"P{self.m}{{{pairs}}}"

    # -- equivariant extension -------------------------------------------

    @cached_property
    def _table(self) -> dict[int, int]:
        return dict(zip(self.domain, self.values))

    @property
    def domain_idempotent(self) -> tuple[int, ...]:
        return self.domain

    @cached_property
    def image_idempotent(self) -> tuple[int, ...]:
        return tuple(sorted(q1(self.m, v) for v in self.values))

    @cached_property
    def _period(self) -> list:
        """``f(t)`` for ``t`` in ``0..2m-3`` (None off the domain closure).

        Translations are in G_m, so ``f(t + n(2m-2)) = f(t) + n(2m-2)``.
        """
        m = self.m
        table = []
        for t in range(2 * m - 2):
            r, g = decompose(m, t)
            v = self._table.get(r)
            table.append(None if v is None else g.apply(m, v))
        return table

    def contains(self, x: int) -> bool:
        return self._period[x % (2 * self.m - 2)] is not None

    def __call__(self, x: int) -> int:
        period = 2 * self.m - 2
        n, t = divmod(x, period)
        v = self._period[t]
        if v is None:
            raise DomainError(f"{x} is not in the G_{self.m}-closure of {self.domain}")
        return v + n * period

    @cached_property
    def max_displacement(self) -> int:
        return max(abs(v - x) for x, v in zip(self.domain, self.values))

    def strands(self, lo: int, hi: int) -> Iterator[tuple[int, int]]:
        """All ``(a, f(a))`` with ``lo <= a <= hi`` and ``a`` in the domain closure."""
        period = 2 * self.m - 2
        table = self._period
        for a in range(lo, hi + 1):
            n, t = divmod(a, period)
            v = table[t]
            if v is not None:
                yield a, v + n * period

    # -- weights and crossings -------------------------------------------

    @cached_property
    def weight(self) -> tuple[int, ...]:
        """Doubled weight vector; entry ``j-1`` is ``2 w_j``."""
        d = self.max_displacement
        out = []
        for j in range(1, self.m + 1):
            c2 = 2 * j - 1
            lo = j - d - 1
            count = 0
            for a, fa in self.strands(lo, j + d):
                if 2 * a < c2 < 2 * fa or 2 * a > c2 > 2 * fa:
                    count += 1
            out.append(count)
        return tuple(out)

    def canonical_crossing(self, i: int, j: int) -> Crossing:
        """Lexicographically least representative with minimum in 1..2m-2."""
        m = self.m
        period = 2 * m - 2
        if i > j:
            i, j = j, i
        shift = (i - 1) // period
        a = Crossing(i - shift * period, j - shift * period)
        # the reflection x -> 1 - x reverses the order of the pair
        ri, rj = 1 - j, 1 - i
        shift = (ri - 1) // period
        b = Crossing(ri - shift * period, rj - shift * period)
        return min(a, b)

    @cached_property
    def crossings(self) -> tuple[Crossing, ...]:
        return _crossings(self)

    def _find_crossings(self) -> tuple[Crossing, ...]:
        period = 2 * self.m - 2
        reach = 2 * self.max_displacement
        found = set()
        for i in range(1, period + 1):
            if not self.contains(i):
                continue
            fi = self(i)
            for j, fj in self.strands(i + 1, i + reach):
                if fi > fj:
                    found.add(self.canonical_crossing(i, j))
        return tuple(sorted(found))

    @property
    def cross(self) -> int:
        return len(self.crossings)

    def is_crossing(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        return i != j and self.contains(i) and self.contains(j) and self(i) > self(j)

    # -- resolutions and composition -------------------------------------

    def resolve(self, c: Crossing) -> LiftedPermutation:
        i, j = c
        if not self.is_crossing(i, j):
            raise ValueError(f"{c} is not a crossing of {self}")
        m = self.m
        ri, gi = decompose(m, i)
        rj, gj = decompose(m, j)
        fi, fj = self(i), self(j)
        table = dict(self._table)
        # x = g^-1 . i  gets  g^-1 . f(j), and symmetrically for j
        table[rj] = gj.inverse().apply(m, fi)
        table[ri] = gi.inverse().apply(m, fj)
        return LiftedPermutation.from_map(m, table)

    def compose(self, other: LiftedPermutation) -> LiftedPermutation | None:
        """``other o self`` (self acts first), or None when idempotents disagree."""
        if other.m != self.m:
            raise ValueError("generators live over different m")
        if self.image_idempotent != other.domain_idempotent:
            return None
        return LiftedPermutation(self.m, self.domain, tuple(other(v) for v in self.values))

    def graph_orbit(self, lo: int, hi: int) -> list[tuple[int, int]]:
        """Lattice points of the graph with first coordinate in ``[lo, hi]``."""
        return list(self.strands(lo, hi))


@lru_cache(maxsize=None)
def _crossings(f: LiftedPermutation) -> tuple[Crossing, ...]:
    # composites of distinct pairs often coincide; share the work between them
    return f._find_crossings()


def weight_vector(f: LiftedPermutation) -> tuple[int, ...]:
    return f.weight


def crossings(f: LiftedPermutation) -> tuple[Crossing, ...]:
    return f.crossings


def resolve(f: LiftedPermutation, c: Crossing) -> LiftedPermutation:
    return f.resolve(c)


def compose(f: LiftedPermutation, g: LiftedPermutation) -> LiftedPermutation | None:
    return f.compose(g)


def evaluate(f: LiftedPermutation, x: int) -> int:
    return f(x)


def idempotent_states(m: int, k: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(1, m), k))


def enumerate_generators(m: int, k: int, max_disp: int) -> list[LiftedPermutation]:
    """Every generator with ``|f(x) - x| <= max_disp`` on each representative."""
    check_context(m, k)
    if max_disp < 0:
        raise ValueError("max_disp must be non-negative")
    out = []
    for dom in idempotent_states(m, k):
        ranges = [range(x - max_disp, x + max_disp + 1) for x in dom]
        for vals in itertools.product(*ranges):
            if len({q1(m, v) for v in vals}) == k:
                out.append(LiftedPermutation(m, dom, vals))
    return out
