from fractions import Fraction

import pytest

from pongalg.core import LiftedPermutation as L
from pongalg.core import enumerate_generators
from pongalg.oracle.geometry import GenericityError, clip, locate
from pongalg.oracle.triangles import (
    LiftedTriangle,
    diagonal_count,
    euler_measure,
    oracle_product,
    pair_contribution,
    triangle_domain,
)
from pongalg.polynomial import Element
from pongalg.pong import idempotent, mu2


def test_idempotent_triple_is_degenerate():
    e = idempotent(3, (2,))
    dom = triangle_domain(e, e)
    assert dom.o_counts == (0, 0, 0) and dom.maslov == 0
    assert euler_measure(dom) == Fraction(1, 4)
    e2 = idempotent(4, (1, 3))
    assert euler_measure(triangle_domain(e2, e2)) == Fraction(2, 4)


def test_simple_triangle():
    f, g = L.from_map(3, {2: 1}), L.from_map(3, {1: 0})
    dom = triangle_domain(f, g)
    assert dom.o_counts == (0, 0, 0) == dom.o_counts_marked
    assert dom.diag_count == 0 and dom.maslov == 0
    assert euler_measure(dom) == Fraction(1, 4)
    assert oracle_product(f, g) == Element.generator(L.from_map(3, {2: 0}))


def test_triangle_over_order_two_point():
    # the single triangle covers a lift of O_1; its rotated copy covers it too
    f, g = L.from_map(3, {1: 0}), L.from_map(3, {1: -1})
    dom = triangle_domain(f, g)
    assert dom.o_counts == (2, 0, 0)
    assert euler_measure(dom) == Fraction(5, 4) == dom.euler_expected()
    assert dom.maslov == 3 and oracle_product(f, g) == 0


def test_not_composable():
    assert triangle_domain(L.from_map(3, {2: -1}), L.from_map(3, {1: 1})) is None
    assert oracle_product(L.from_map(3, {2: -1}), L.from_map(3, {1: 1})) == 0


def test_reflected_strand_pair():
    f, g = L.from_map(3, {2: -1}), L.from_map(3, {2: 5})
    dom = triangle_domain(f, g)
    assert dom.maslov == f.cross + g.cross - dom.composite.cross == 0
    assert oracle_product(f, g) == mu2(Element.generator(f), Element.generator(g))


def test_pair_contributions():
    t = LiftedTriangle((0, 0), 9)
    assert pair_contribution(t, LiftedTriangle((40, 40), 9)) == 0  # translate
    assert pair_contribution(t, LiftedTriangle((2, 2), 3)) == 2  # nested
    assert pair_contribution(t, LiftedTriangle((60, 0), 3)) == 0  # far apart
    with pytest.raises(GenericityError):
        pair_contribution(t, LiftedTriangle((0, 2), 3))
    assert diagonal_count(3, [LiftedTriangle((6, 4), -1)]) == 0
    # a triangle around an O_1 lift meets its own rotated copy
    assert diagonal_count(3, [t]) == 1


def test_geometry_helpers():
    square = [(0, 0), (4, 0), (4, 4), (0, 4)]
    half = clip(square, 1, 1, 4)
    assert sorted(half) == [(0, 0), (0, 4), (4, 0)]
    assert locate(half, (1, 1)) == 1 and locate(half, (2, 2)) == 0
    assert locate(half, (3, 3)) == -1
    assert clip(square, 1, 0, -1) == []
    assert clip(square, 3, 3, 1) == [(0, 0), (Fraction(1, 3), 0), (0, Fraction(1, 3))]


@pytest.mark.parametrize("m,k", [(2, 1), (3, 1), (3, 2), (4, 1)])
def test_identities_exhaustive(m, k):
    gens = enumerate_generators(m, k, 3)
    for f in gens:
        for g in gens:
            dom = triangle_domain(f, g)
            if dom is None:
                continue
            assert dom.o_counts == dom.o_counts_marked
            assert min(dom.o_counts) >= 0
            assert dom.euler == dom.euler_expected()
            assert dom.sarkar_index() == dom.maslov
            if dom.o_counts[0] == dom.o_counts[-1] == 0:
                assert dom.diag_count == f.cross + g.cross - dom.composite.cross
            assert oracle_product(f, g) == mu2(Element.generator(f), Element.generator(g))
