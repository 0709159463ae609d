import pytest

from pongalg import asteroids as ast
from pongalg.asteroids import CyclicLiftedPermutation as A
from pongalg.core import InvalidGenerator
from pongalg.polynomial import Element

gen = Element.generator
EX = A(3, (1, 2), (6, 1))


def test_worked_example():
    assert len(ast.a_crossings(EX)) == 2
    assert ast.a_weight_vector(EX) == (1, 3, 2)
    d = ast.a_diff(gen(EX))
    assert len(d) == 2
    assert all(list(p) == [(0, 1, 0)] for _, p in d.items())
    assert set(d.terms) == {A(3, (1, 2), (1, 6)), A(3, (1, 2), (4, 3))}


def test_trivial_cases():
    e = A.identity(3, (1, 2))
    assert ast.a_crossings(e) == ()
    assert ast.a_weight_vector(e) == (0, 0, 0)
    assert ast.a_diff(gen(e)) == 0
    assert ast.a_mu2(gen(e), gen(EX)) == gen(EX)
    assert ast.a_crossings(A(1, (1,), (1,))) == ()


def test_single_long_strand():
    assert ast.a_weight_vector(A(3, (1,), (4,))) == (1, 1, 1)


def test_translation_normalisation():
    for c in EX.crossings:
        for n in range(-3, 4):
            assert EX.canonical_crossing(c.i + 3 * n, c.j + 3 * n) == c


def test_k_equal_m_allowed_and_bounds():
    assert A(2, (1, 2), (2, 1)).k == 2
    with pytest.raises(InvalidGenerator):
        A(2, (1, 2), (1, 3))
    with pytest.raises(InvalidGenerator):
        ast.check_context(0, 1)


@pytest.mark.parametrize("m,k,d", [(1, 1, 3), (3, 2, 3), (2, 2, 3)])
def test_axioms(m, k, d):
    from pongalg.verify import a_verify

    rep = a_verify(m, k, d)
    assert rep.passed, rep.failures


def test_degenerate_m1_is_polynomial_ring():
    gens = ast.enumerate_generators(1, 1, 3)
    assert [g.values[0] for g in gens] == [-2, -1, 0, 1, 2, 3, 4]
    assert all(g.cross == 0 for g in gens)
