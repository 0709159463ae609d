"""Heegaard triples: lifted triangles for a composable pair.

In the triple diagram the alpha lines are vertical (x = i), the gamma lines
horizontal (y = j), and the beta lines have slope -1.  The beta line labelled
by the integer t = g.r (r in 1..m-1) meets the diagonal at g.(r + 1/4), i.e.
at t + sign(g)/4; this keeps the beta family G_m-invariant, puts exactly one
O marking between neighbouring beta lines, and avoids triple points.

A strand s of the pair (f, g) gives the right triangle with alpha-gamma corner
(s, g(f(s))), alpha-beta corner on x = s, and beta-gamma corner on y = g(f(s)).
All coordinates are half-integers; internally they are doubled to stay in the
integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

from ..core import GroupElement, LiftedPermutation, decompose
from ..polynomial import Element
from .geometry import GenericityError, clip, locate


@dataclass(frozen=True)
class LiftedTriangle:
    """Right triangle in doubled coordinates.

    ``corner`` is the alpha-gamma vertex ``(2s, 2h)``; the legs run from it
    along x = s and y = h with signed doubled length ``leg`` (odd).
    """

    corner: tuple[int, int]
    leg: int

    @property
    def vertices(self) -> tuple[tuple[Fraction, Fraction], ...]:
        """Undoubled vertices: alpha-gamma, alpha-beta, beta-gamma."""
        (x, y), d = self.corner, self.leg
        pts = ((x, y), (x, y + d), (x + d, y))
        return tuple((Fraction(a, 2), Fraction(b, 2)) for a, b in pts)

    def polygon(self) -> list:
        """Counterclockwise doubled vertices."""
        (x, y), d = self.corner, self.leg
        # negating both legs is a half-turn, so orientation is kept
        return [(x, y), (x + d, y), (x, y + d)]

    def halfplanes(self) -> list[tuple[int, int, int]]:
        """``(a, b, c)`` with the triangle = {a x + b y <= c} in doubled coordinates."""
        (x, y), d = self.corner, self.leg
        if d > 0:
            return [(-1, 0, -x), (0, -1, -y), (1, 1, x + y + d)]
        return [(1, 0, x), (0, 1, y), (-1, -1, -(x + y + d))]

    def bbox(self) -> tuple[int, int, int, int]:
        (x, y), d = self.corner, self.leg
        return min(x, x + d), max(x, x + d), min(y, y + d), max(y, y + d)

    def classify(self, pt) -> int:
        """1 strictly inside, 0 on the boundary, -1 outside (doubled point)."""
        worst = 1
        for a, b, c in self.halfplanes():
            v = c - (a * pt[0] + b * pt[1])
            if v < 0:
                return -1
            if v == 0:
                worst = 0
        return worst


def beta_crossing4(m: int, t: int) -> int:
    """Four times the diagonal coordinate where the beta line ``t`` crosses."""
    _, g = decompose(m, t)
    return 4 * t + g.sign


def lifted_triangle(m: int, s: int, mid: int, end: int) -> LiftedTriangle:
    """Triangle for the strand ``s -> mid -> end``."""
    leg = beta_crossing4(m, mid) - 2 * s - 2 * end
    return LiftedTriangle((2 * s, 2 * end), leg)


def act_triangle(m: int, g, tri: LiftedTriangle) -> LiftedTriangle:
    (x, y), d = tri.corner, tri.leg
    return LiftedTriangle((g.apply_doubled(m, x), g.apply_doubled(m, y)), g.sign * d)


def rotation_centers(m: int, lo2: int, hi2: int) -> list[int]:
    """Doubled diagonal coordinates of O_1/O_m lifts in ``[lo2, hi2]``."""
    step = 2 * m - 2
    first = lo2 + ((1 - lo2) % step)
    return list(range(first, hi2 + 1, step))


def marked_point_counts(m: int, triangles) -> list[int]:
    """Multiplicity of the quotient domain at each O marking.

    Counts lifts of O_i inside the triangles; O_1 and O_m sit at orbifold
    points of order two, so each lift there is seen twice downstairs.
    """
    counts = [0] * m
    for tri in triangles:
        x0, x1, y0, y1 = tri.bbox()
        lo, hi = max(x0, y0), min(x1, y1)
        for c2 in range(lo | 1, hi + 1, 2):
            where = tri.classify((c2, c2))
            if where == 0:
                raise GenericityError(f"O marking at {c2}/2 on the boundary of {tri}")
            if where < 0:
                continue
            # q2 on a doubled half-integer
            j = (c2 + 1) // 2
            t = (j - 1) % (2 * m - 2)
            idx = t if t <= m - 1 else 2 * m - 2 - t
            counts[idx] += 2 if idx in (0, m - 1) else 1
    return counts


def _candidate_group_elements(m: int, box_i, box_j):
    """Group elements moving ``box_j`` onto something meeting ``box_i``."""
    period2 = 4 * m - 4
    x0, x1, _, _ = box_i
    a0, a1, _, _ = box_j
    for sign in (1, -1):
        b0, b1 = (a0, a1) if sign == 1 else (2 - a1, 2 - a0)
        lo = (x0 - b1) // period2 - 1
        hi = (x1 - b0) // period2 + 1
        for n in range(lo, hi + 1):
            yield GroupElement(sign, n)


def _overlap(b1, b2) -> bool:
    return b1[0] <= b2[1] and b2[0] <= b1[1] and b1[2] <= b2[3] and b2[2] <= b1[3]


def pair_contribution(tri: LiftedTriangle, other: LiftedTriangle) -> int:
    """Local intersection with the diagonal of Sym^2 for ``tri`` x ``other``.

    ``other`` is the image of ``tri`` under t -> lam*t + b matching vertex
    types.  The pair meets the diagonal (with multiplicity two) exactly when
    that map has a fixed point inside the triangle.
    """
    lam = Fraction(other.leg, tri.leg)
    if lam == 1:
        return 0
    fixed = tuple(
        (o - lam * t) / (1 - lam) for o, t in zip(other.corner, tri.corner)
    )
    where = tri.classify(fixed)
    if where == 0:
        raise GenericityError(f"fixed point {fixed} on the boundary of {tri}")
    return 2 if where > 0 else 0


def diagonal_count(m: int, triangles) -> int:
    """Half the ordered count over pairs (T_i, g T_j), identity self-pair excluded."""
    total = 0
    for i, ti in enumerate(triangles):
        box_i = ti.bbox()
        for j, tj in enumerate(triangles):
            for g in _candidate_group_elements(m, box_i, tj.bbox()):
                if i == j and g.is_identity:
                    continue
                moved = act_triangle(m, g, tj)
                if not _overlap(box_i, moved.bbox()):
                    continue
                total += pair_contribution(ti, moved)
    if total % 2:
        raise AssertionError(f"odd ordered diagonal count {total}")
    return total // 2


def beta_constants(m: int, lo: int, hi: int) -> list[int]:
    """Doubled ``x + y`` values of beta lines strictly between ``lo`` and ``hi``."""
    out = []
    for t in range((lo - 1) // 4 - 1, hi // 4 + 2):
        c = beta_crossing4(m, t)
        if lo < c < hi:
            out.append(c)
    return sorted(out)


def faces(tri: LiftedTriangle, m: int):
    """Elementary faces of the alpha/beta/gamma arrangement inside ``tri``.

    Each unit grid square is cut by at most two beta lines, so faces are
    produced square by square.
    """
    x0, x1, y0, y1 = tri.bbox()
    planes = tri.halfplanes()
    for a in range(x0 - x0 % 2, x1, 2):
        for b in range(y0 - y0 % 2, y1, 2):
            square = [(a, b), (a + 2, b), (a + 2, b + 2), (a, b + 2)]
            for pa, pb, pc in planes:
                square = clip(square, pa, pb, pc)
                if not square:
                    break
            if not square:
                continue
            cuts = beta_constants(m, a + b, a + b + 4)
            bounds = [None] + cuts + [None]
            for lo, hi in zip(bounds, bounds[1:]):
                piece = square
                if lo is not None:
                    piece = clip(piece, -1, -1, -lo)
                if piece and hi is not None:
                    piece = clip(piece, 1, 1, hi)
                if piece:
                    yield piece


def face_stabilizer(m: int, face) -> int:
    """2 when an O_1/O_m rotation center lies inside the face, else 1."""
    xs = [p[0] for p in face]
    for c2 in rotation_centers(m, int(min(xs)) - 1, int(max(xs)) + 1):
        where = locate(face, (c2, c2))
        if where == 0:
            raise GenericityError(f"orbifold point {c2}/2 on the edge of face {face}")
        if where > 0:
            return 2
    return 1


def euler_measure_of(m: int, triangles) -> Fraction:
    """Euler measure of the quotient domain, summed face by face.

    A face downstairs with c corners has measure 1 - c/4.  An upstairs face
    with stabiliser of order two covers a downstairs face with half as many
    corners, and the domain's multiplicity there is doubled.
    """
    total = Fraction(0)
    for tri in triangles:
        for face in faces(tri, m):
            total += face_stabilizer(m, face) - Fraction(len(face), 4)
    return total


@dataclass(frozen=True)
class TriangleDomain:
    f: LiftedPermutation
    g: LiftedPermutation
    composite: LiftedPermutation
    triangles: tuple[LiftedTriangle, ...]
    o_counts: tuple[int, ...]
    o_counts_marked: tuple[int, ...]
    diag_count: int
    maslov: int = field(init=False)

    def __post_init__(self):
        o = self.o_counts_marked
        object.__setattr__(self, "maslov", o[0] + o[-1] + self.diag_count)

    @property
    def k(self) -> int:
        return len(self.triangles)

    @cached_property
    def euler(self) -> Fraction:
        return euler_measure_of(self.f.m, self.triangles)

    def euler_expected(self) -> Fraction:
        o = self.o_counts_marked
        return Fraction(self.k, 4) + Fraction(o[0], 2) + Fraction(o[-1], 2)

    def sarkar_index(self) -> Fraction:
        """2e - k/2 + #(diagonal), the index of a triangle from its domain."""
        return 2 * self.euler - Fraction(self.k, 2) + self.diag_count


@lru_cache(maxsize=None)
def triangle_domain(f: LiftedPermutation, g: LiftedPermutation) -> TriangleDomain | None:
    """Lifted triangles of a composable pair, or None when ``g o f`` is undefined."""
    h = f.compose(g)
    if h is None:
        return None
    m = f.m
    tris = tuple(lifted_triangle(m, s, fs, g(fs)) for s, fs in zip(f.domain, f.values))
    doubled = [a + b - c for a, b, c in zip(f.weight, g.weight, h.weight)]
    if any(x % 2 for x in doubled):
        raise AssertionError(f"odd weight defect for {f}, {g}")
    return TriangleDomain(
        f, g, h, tris,
        o_counts=tuple(x // 2 for x in doubled),
        o_counts_marked=tuple(marked_point_counts(m, tris)),
        diag_count=diagonal_count(m, tris),
    )


def euler_measure(dom: TriangleDomain) -> Fraction:
    return dom.euler


def oracle_product(a, b) -> Element:
    """Product counted from index-zero lifted triangles."""
    if isinstance(a, LiftedPermutation):
        a = Element.generator(a)
    if isinstance(b, LiftedPermutation):
        b = Element.generator(b)
    out = Element()
    for f, p in a.terms.items():
        for g, q in b.terms.items():
            dom = triangle_domain(f, g)
            if dom is None or dom.maslov != 0:
                continue
            mono = dom.o_counts_marked
            for x in p:
                for y in q:
                    out.iadd_term(dom.composite, tuple(u + v + w for u, v, w in zip(x, y, mono)))
    return out
