"""Exact convex-polygon clipping in the plane.

Coordinates are ints or Fractions.  The diagrams used here only ever produce
half-integral vertices, so callers work in doubled coordinates and the fast
integer path is the common one; non-integral intersections fall back to
Fraction rather than losing exactness.
"""

from __future__ import annotations

from fractions import Fraction

Point = tuple


class GenericityError(RuntimeError):
    """A point that should be off every line landed exactly on one."""


def _div(num, den):
    if isinstance(num, int) and isinstance(den, int):
        q, r = divmod(num, den)
        if r == 0:
            return q
    return Fraction(num) / den


def clip(poly: list, a, b, c) -> list:
    """Part of the convex polygon ``poly`` with ``a*x + b*y <= c``."""
    out = []
    n = len(poly)
    for idx in range(n):
        p = poly[idx]
        q = poly[(idx + 1) % n]
        vp = a * p[0] + b * p[1] - c
        vq = a * q[0] + b * q[1] - c
        if vp <= 0:
            out.append(p)
        if (vp < 0 < vq) or (vq < 0 < vp):
            den = vp - vq
            out.append((p[0] + _div(vp * (q[0] - p[0]), den),
                        p[1] + _div(vp * (q[1] - p[1]), den)))
    return _simplify(out)


def _cross(o, p, q):
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


def _simplify(poly: list) -> list:
    """Drop repeated and collinear vertices."""
    pts = []
    for p in poly:
        if not pts or pts[-1] != p:
            pts.append(p)
    if len(pts) > 1 and pts[0] == pts[-1]:
        pts.pop()
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        for idx in range(len(pts)):
            o, p, q = pts[idx - 1], pts[idx], pts[(idx + 1) % len(pts)]
            if _cross(o, p, q) == 0:
                del pts[idx]
                changed = True
                break
    return pts if len(pts) >= 3 else []


def area2(poly: list):
    """Twice the signed area."""
    total = 0
    for idx in range(len(poly)):
        p, q = poly[idx - 1], poly[idx]
        total += p[0] * q[1] - p[1] * q[0]
    return total


def locate(poly: list, pt) -> int:
    """1 inside, 0 on the boundary, -1 outside, for a counterclockwise polygon."""
    sign = 1
    for idx in range(len(poly)):
        c = _cross(poly[idx - 1], poly[idx], pt)
        if c < 0:
            return -1
        if c == 0:
            sign = 0
    return sign
