"""The asteroids algebra A(m, k): the cyclic analogue of pong.

Generators are mZ-equivariant partial permutations of the integers,
``f(x + m) = f(x) + m``, with a k-element domain in {1, ..., m}.  There are no
reflections, so crossing classes are normalised by translation alone.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

from . import algebra
from .core import Crossing, DomainError, InvalidGenerator
from .polynomial import Element


def check_context(m: int, k: int) -> None:
    if m < 1:
        raise InvalidGenerator(f"asteroids needs m >= 1, got m={m}")
    if not 1 <= k <= m:
        raise InvalidGenerator(f"asteroids needs 1 <= k <= m, got m={m}, k={k}")


@dataclass(frozen=True, order=True)
class CyclicLiftedPermutation:
    m: int
    domain: tuple[int, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "domain", tuple(self.domain))
        object.__setattr__(self, "values", tuple(self.values))
        check_context(self.m, len(self.domain))
        if len(self.values) != len(self.domain):
            raise InvalidGenerator("domain and values differ in length")
        if any(not 1 <= x <= self.m for x in self.domain):
            raise InvalidGenerator(f"domain {self.domain} not inside 1..{self.m}")
        if any(a >= b for a, b in zip(self.domain, self.domain[1:])):
            raise InvalidGenerator(f"domain {self.domain} not strictly increasing")
        if len({v % self.m for v in self.values}) != len(self.values):
            raise InvalidGenerator(f"values {self.values} collide mod {self.m}")

    def __hash__(self):
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
    def from_map(cls, m: int, mapping: dict[int, int]) -> CyclicLiftedPermutation:
        dom = tuple(sorted(mapping))
        return cls(m, dom, tuple(mapping[x] for x in dom))

    @classmethod
    def identity(cls, m: int, state) -> CyclicLiftedPermutation:
        state = tuple(sorted(state))
        return cls(m, state, state)

    def __repr__(self):
        pairs = ", ".join(f"{x}->{v}" for x, v in zip(self.domain, self.values))
        return f"A{self.m}{{{pairs}}}"

    @cached_property
    def _table(self) -> dict[int, int]:
        return {(x - 1) % self.m: v - x for x, v in zip(self.domain, self.values)}

    @property
    def domain_idempotent(self) -> tuple[int, ...]:
        return self.domain

    @cached_property
    def image_idempotent(self) -> tuple[int, ...]:
        return tuple(sorted((v - 1) % self.m + 1 for v in self.values))

    def contains(self, x: int) -> bool:
        return (x - 1) % self.m in self._table

    def __call__(self, x: int) -> int:
        try:
            return x + self._table[(x - 1) % self.m]
        except KeyError:
            raise DomainError(f"{x} is not in {self.domain} + {self.m}Z") from None

    @cached_property
    def max_displacement(self) -> int:
        return max(abs(v - x) for x, v in zip(self.domain, self.values))

    def strands(self, lo: int, hi: int):
        for a in range(lo, hi + 1):
            if self.contains(a):
                yield a, self(a)

    @cached_property
    def weight(self) -> tuple[int, ...]:
        d = self.max_displacement
        out = []
        for a in range(1, self.m + 1):
            c2 = 2 * a - 1
            count = 0
            for i, fi in self.strands(a - d - 1, a + d):
                if 2 * i < c2 < 2 * fi or 2 * fi < c2 < 2 * i:
                    count += 1
            out.append(count)
        return tuple(out)

    def canonical_crossing(self, i: int, j: int) -> Crossing:
        if i > j:
            i, j = j, i
        shift = (i - 1) // self.m * self.m
        return Crossing(i - shift, j - shift)

    @cached_property
    def crossings(self) -> tuple[Crossing, ...]:
        return _crossings(self)

    def _find_crossings(self) -> tuple[Crossing, ...]:
        reach = 2 * self.max_displacement
        found = []
        for i in range(1, self.m + 1):
            if not self.contains(i):
                continue
            fi = self(i)
            for j, fj in self.strands(i + 1, i + reach):
                if fi > fj:
                    found.append(Crossing(i, j))
        return tuple(sorted(found))

    @property
    def cross(self) -> int:
        return len(self.crossings)

    def resolve(self, c: Crossing) -> CyclicLiftedPermutation:
        i, j = c
        if not (i < j and self.contains(i) and self.contains(j) and self(i) > self(j)):
            raise ValueError(f"{c} is not a crossing of {self}")
        m = self.m
        table = dict(zip(self.domain, self.values))
        ri = (i - 1) % m + 1
        rj = (j - 1) % m + 1
        table[ri] = self(j) - (i - ri)
        table[rj] = self(i) - (j - rj)
        return CyclicLiftedPermutation.from_map(m, table)

    def compose(self, other: CyclicLiftedPermutation) -> CyclicLiftedPermutation | None:
        if other.m != self.m:
            raise ValueError("generators live over different m")
        if self.image_idempotent != other.domain_idempotent:
            return None
        return CyclicLiftedPermutation(self.m, self.domain, tuple(other(v) for v in self.values))


@lru_cache(maxsize=None)
def _crossings(f: CyclicLiftedPermutation) -> tuple[Crossing, ...]:
    return f._find_crossings()


def a_crossings(f: CyclicLiftedPermutation):
    return f.crossings


def a_weight_vector(f: CyclicLiftedPermutation) -> tuple[int, ...]:
    return f.weight


def a_mu2(a: Element, b: Element) -> Element:
    return algebra.mu2(a, b)


def a_diff(a: Element) -> Element:
    return algebra.diff(a)


def idempotent_states(m: int, k: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(1, m + 1), k))


def enumerate_generators(m: int, k: int, max_disp: int) -> list[CyclicLiftedPermutation]:
    check_context(m, k)
    if max_disp < 0:
        raise ValueError("max_disp must be non-negative")
    out = []
    for dom in idempotent_states(m, k):
        ranges = [range(x - max_disp, x + max_disp + 1) for x in dom]
        for vals in itertools.product(*ranges):
            if len({v % m for v in vals}) == k:
                out.append(CyclicLiftedPermutation(m, dom, vals))
    return out
