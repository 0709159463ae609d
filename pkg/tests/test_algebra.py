import pytest

from pongalg import pong
from pongalg.algebra import WeightBookkeepingError, correction_monomial
from pongalg.core import LiftedPermutation as L
from pongalg.polynomial import Element, poly_mul
from pongalg.verify import verify_dga

gen = Element.generator
BIGON = L.from_map(3, {2: -1})


def test_idempotents():
    e = pong.idempotent(3, {2})
    assert e == L.identity(3, (2,)) and e.weight == (0, 0, 0)
    assert pong.idempotent(4, [3, 1]).cross == 0
    assert pong.mu2(gen(e), gen(BIGON)) == gen(BIGON)


def test_mu2_examples():
    f, g = L.from_map(3, {2: 1}), L.from_map(3, {1: 0})
    assert pong.mu2(gen(f), gen(g)) == gen(L.from_map(3, {2: 0}))
    assert pong.mu2(gen(BIGON), gen(L.from_map(3, {1: 1}))) == 0


def test_mu2_crossings_add_for_reflected_strand():
    # 2 -> -1 followed by 2 -> 5 sends 2 to 1 - 5 = -4; crossing counts 1 + 2 = 3
    g = L.from_map(3, {2: 5})
    h = L.from_map(3, {2: -4})
    assert (BIGON.cross, g.cross, h.cross) == (1, 2, 3)
    assert pong.mu2(gen(BIGON), gen(g)) == gen(h)


def test_mu2_vanishes_on_crossing_defect():
    f = L.from_map(3, {2: -1})
    assert pong.mu2(gen(f), gen(f)) == 0  # the two bigon strands cancel out


def test_diff_examples():
    assert pong.diff(gen(pong.idempotent(3, (2,)))) == 0
    assert pong.diff(gen(BIGON)) == Element.monomial(L.from_map(3, {2: 2}), (1, 1, 0))
    d = pong.diff(gen(L.from_map(2, {1: -1})))
    assert set(d.terms) == {L.from_map(2, {1: 2}), L.from_map(2, {1: 0})}


def test_maslov_and_weights():
    assert pong.maslov(pong.idempotent(3, (2,))) == 0
    assert pong.maslov(BIGON) == 1
    assert pong.maslov(L.from_map(2, {1: -1})) == 2
    assert pong.weight_of_term(pong.idempotent(3, (2,)), (1, 0, 0)) == (2, 0, 0)
    assert pong.weight_of_term(BIGON, (0, 0, 0)) == (2, 2, 0)
    assert pong.weight_of_term(L.from_map(3, {2: 2}), (1, 1, 0)) == (2, 2, 0)


def test_linearity_over_polynomials():
    a = Element({BIGON: [(0, 0, 0), (2, 0, 1)]})
    expected = pong.diff(gen(BIGON)).scale(frozenset({(0, 0, 0), (2, 0, 1)}))
    assert pong.diff(a) == expected


def test_element_arithmetic():
    a = pong.element(BIGON, mono=(1, 0, 0))
    assert a + a == 0
    assert not (a + a)
    assert poly_mul(frozenset({(1, 0, 0), (0, 1, 0)}), frozenset({(1, 0, 0), (0, 1, 0)})) == \
        frozenset({(2, 0, 0), (0, 2, 0)})


def test_correction_monomial_guards():
    assert correction_monomial((4, 2), (2, 2), None) == (1, 0)
    with pytest.raises(WeightBookkeepingError):
        correction_monomial((1, 0), (0, 0), None)
    with pytest.raises(WeightBookkeepingError):
        correction_monomial((0, 0), (2, 0), None)


def test_only_diff_and_mu2_are_operations():
    ops = {n for n in pong.__all__ if n.startswith(("mu", "diff"))}
    assert ops == {"mu2", "diff"}


@pytest.mark.parametrize("m,k,d", [(2, 1, 4), (3, 1, 4), (3, 2, 2)])
def test_verify_small(m, k, d):
    rep = verify_dga(m, k, d)
    assert rep.passed, rep.failures
    assert rep.checks["associativity"] > 0


def test_parallel_report_matches_serial():
    a = verify_dga(3, 2, 2).to_dict()
    b = verify_dga(3, 2, 2, jobs=2).to_dict()
    a.pop("wall_time"), b.pop("wall_time")
    assert a == b
