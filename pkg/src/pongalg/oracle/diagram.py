"""Heegaard-diagram model of P(m, k): states, domains, rectangles.

A generator is read as its graph, a G_m-invariant set of lattice points in the
plane (vertical alpha lines x = i, horizontal beta lines y = j, O markings on
the diagonal at half-integers).  G_m acts diagonally; its reflections become
180 degree rotations about the O_1 and O_m markings.

Everything here is recomputed from the picture: rectangle emptiness from
lattice points, monomials from local multiplicities of domains.  None of it
calls the crossing-count rules of the algebra.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from ..core import LiftedPermutation, decompose
from ..polynomial import Element


class NoConnectingDomain(ValueError):
    """The two states are not joined by a compactly supported domain."""


class InvariantViolation(AssertionError):
    pass


class PlanarRectangle(NamedTuple):
    x1: int
    y1: int
    x2: int
    y2: int
    shape: str  # "bigon" or "rectangle"


def lattice_state(f: LiftedPermutation, lo: int, hi: int) -> list[tuple[int, int]]:
    """Graph points with first coordinate in ``[lo, hi]``."""
    return list(f.strands(lo, hi))


def act(m: int, g, point):
    return g.apply(m, point[0]), g.apply(m, point[1])


def _check_connectable(f: LiftedPermutation, g: LiftedPermutation) -> None:
    if f.m != g.m:
        raise NoConnectingDomain("different m")
    if f.domain_idempotent != g.domain_idempotent or f.image_idempotent != g.image_idempotent:
        raise NoConnectingDomain(f"{f} and {g} have different idempotents")


def local_multiplicity(f: LiftedPermutation, g: LiftedPermutation, i: int, j: int) -> int:
    """Multiplicity of the domain from ``f`` to ``g`` at (i + 1/2, j + 1/2).

    Counts the vertical alpha arcs from f(a) to g(a) to the left of the
    point, signed by direction.
    """
    _check_connectable(f, g)
    d = max(f.max_displacement, g.max_displacement)
    total = 0
    for a in range(j - d - 1, min(i, j + d + 1) + 1):
        if not f.contains(a):
            continue
        fa, ga = f(a), g(a)
        if ga <= j < fa:
            total += 1
        elif fa <= j < ga:
            total -= 1
    return total


def o_multiplicities(f: LiftedPermutation, g: LiftedPermutation) -> list[int]:
    """Multiplicities of the connecting domain at O_1, ..., O_m.

    Computed from the weight vectors and confirmed against the local
    multiplicity at each marking.
    """
    _check_connectable(f, g)
    out = []
    for idx, (wf, wg) in enumerate(zip(f.weight, g.weight)):
        if (wf - wg) % 2:
            raise InvariantViolation(f"odd doubled weight drop between {f} and {g}")
        out.append((wf - wg) // 2)
        direct = local_multiplicity(f, g, idx, idx)
        if direct != out[-1]:
            raise InvariantViolation(
                f"O_{idx + 1}: weight drop {out[-1]} but local multiplicity {direct} ({f}, {g})"
            )
    return out


def marked_multiplicities(f: LiftedPermutation, g: LiftedPermutation) -> list[int]:
    """Local multiplicities at the O markings, read straight off the domain."""
    return [local_multiplicity(f, g, idx, idx) for idx in range(f.m)]


def _support_window(f: LiftedPermutation, g: LiftedPermutation):
    # the domain is G_m-invariant, so columns over one fundamental strip
    # i + 1/2 in [1/2, m - 1/2] suffice; off the band |x - y| <= 2d the
    # arcs to the left have zero net flux
    d = max(f.max_displacement, g.max_displacement)
    for i in range(0, f.m):
        for j in range(i - 2 * d - 2, i + 2 * d + 3):
            yield i, j


def dominates(f: LiftedPermutation, g: LiftedPermutation) -> bool:
    """Every local multiplicity of the connecting domain is >= 0."""
    return all(local_multiplicity(f, g, i, j) >= 0 for i, j in _support_window(f, g))


def rectangle_for(f: LiftedPermutation, i: int, j: int) -> tuple[int, int, int, int]:
    """Upper-left and lower-right corners of the rectangle of the pair (i, j)."""
    if i > j:
        i, j = j, i
    return i, f(i), j, f(j)


def _translates(m: int, rect):
    """Images of ``rect`` under G_m whose x-range meets the original's."""
    x1, y1, x2, y2 = rect
    period = 2 * m - 2
    for sign in (1, -1):
        # sign=-1 is the rotation x -> 1 - x followed by a translation
        a, b = (x1, x2) if sign == 1 else (1 - x2, 1 - x1)
        c, d = (y2, y1) if sign == 1 else (1 - y1, 1 - y2)
        lo = -((b - x1) // period) - 1
        hi = (x2 - a) // period + 1
        for n in range(lo, hi + 1):
            s = n * period
            yield a + s, b + s, c + s, d + s


def _is_empty(f: LiftedPermutation, rect) -> bool:
    """No graph point inside, and no other translate overlapping it."""
    x1, y1, x2, y2 = rect
    for a, fa in f.strands(x1 + 1, x2 - 1):
        if y2 < fa < y1:
            return False
    for a, b, c, d in _translates(f.m, rect):
        if (a, b, c, d) == (x1, x2, y2, y1):
            continue
        if a < x2 and x1 < b and c < y1 and y2 < d:
            return False
    return True


def _shape(f: LiftedPermutation, rect) -> str:
    """Bigon when a rotation in G_m swaps the two marked corners."""
    x1, y1, x2, y2 = rect
    r1, g1 = decompose(f.m, x1)
    r2, g2 = decompose(f.m, x2)
    if r1 == r2 and g1.sign != g2.sign:
        return "bigon"
    return "rectangle"


def _rectangle_orbits(f: LiftedPermutation) -> dict:
    """One rectangle per G_m-orbit, keyed by its orbit's canonical corner pair."""
    m = f.m
    period = 2 * m - 2
    d = f.max_displacement
    found = {}
    for x1, y1 in f.strands(1, period):
        for x2, y2 in f.strands(x1 + 1, x1 + 2 * d):
            if y2 >= y1:
                continue
            key = min(_orbit_keys(m, x1, x2))
            found.setdefault(key, (x1, y1, x2, y2))
    return found


def _orbit_keys(m: int, x1: int, x2: int):
    period = 2 * m - 2
    for a, b in ((x1, x2), (1 - x2, 1 - x1)):
        shift = (a - 1) // period * period
        yield a - shift, b - shift


def empty_rectangles(f: LiftedPermutation) -> list[PlanarRectangle]:
    out = []
    for _, rect in sorted(_rectangle_orbits(f).items()):
        if _is_empty(f, rect):
            out.append(PlanarRectangle(*rect, _shape(f, rect)))
    return out


def swap_corners(f: LiftedPermutation, rect) -> LiftedPermutation:
    """The state obtained by trading the marked corners for the other two."""
    x1, y1, x2, y2 = rect
    m = f.m
    table = dict(zip(f.domain, f.values))
    for x, y in ((x1, y2), (x2, y1)):
        r, g = decompose(m, x)
        table[r] = g.inverse().apply(m, y)
    return LiftedPermutation.from_map(m, table)


def oracle_differential_terms(f: LiftedPermutation) -> list[tuple[tuple[int, ...], LiftedPermutation, PlanarRectangle]]:
    out = []
    for rect in empty_rectangles(f):
        target = swap_corners(f, rect[:4])
        mono = marked_multiplicities(f, target)
        if any(e < 0 for e in mono):
            raise InvariantViolation(f"negative multiplicity {mono} on {rect} of {f}")
        out.append((tuple(mono), target, rect))
    return out


def oracle_differential(a) -> Element:
    """Differential counted from empty rectangles and bigons."""
    if isinstance(a, LiftedPermutation):
        a = Element.generator(a)
    out = Element()
    for f, poly in a.terms.items():
        for mono, target, _ in oracle_differential_terms(f):
            for x in poly:
                out.iadd_term(target, tuple(p + q for p, q in zip(x, mono)))
    return out


@dataclass(frozen=True)
class Positivity:
    verdict: str  # "equal", "greater", "incomparable"
    path: tuple = ()


def resolution_path(f: LiftedPermutation, g: LiftedPermutation) -> tuple | None:
    """A chain of empty-rectangle moves from ``f`` down to ``g``.

    Breadth-first over states reachable by single empty rectangles.  Weights
    never increase along a move, so states whose weight drops below ``g``'s
    anywhere are pruned.
    """
    if f == g:
        return ()
    seen = {f}
    queue = deque([(f, ())])
    while queue:
        state, path = queue.popleft()
        for rect in empty_rectangles(state):
            nxt = swap_corners(state, rect[:4])
            if nxt in seen:
                continue
            if any(a < b for a, b in zip(nxt.weight, g.weight)):
                continue
            seen.add(nxt)
            step = path + ((state, rect),)
            if nxt == g:
                return step
            queue.append((nxt, step))
    return None


def positivity(f: LiftedPermutation, g: LiftedPermutation) -> Positivity:
    """Compare two states by domain positivity and by resolution paths.

    The two answers must agree.
    """
    _check_connectable(f, g)
    if f == g:
        return Positivity("equal")
    by_counts = dominates(f, g)
    path = resolution_path(f, g)
    if by_counts != (path is not None):
        raise InvariantViolation(f"positivity says {by_counts} but path search found {path} for {f} > {g}")
    if path is None:
        return Positivity("incomparable")
    if len(path) != f.cross - g.cross:
        raise InvariantViolation(
            f"{len(path)} index-one steps from {f} to {g}, crossing drop {f.cross - g.cross}"
        )
    return Positivity("greater", path)
