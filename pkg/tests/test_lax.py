from itertools import product

import pytest

from apollonian_kingdom.circles import circle_from_lattice, tangency_lax
from apollonian_kingdom.gaussian import I, UNITS, GaussInt, GaussMatrix2
from apollonian_kingdom.lax import (
    LaxLattice,
    LaxVector,
    Superbasis,
    Vec2,
    complete_wall,
    contains_lax,
    court_check,
    cross_wall,
    is_basis,
    is_superbasis,
    lattice_equal,
    lax_canonical,
    superbasis_zero_sum,
)
from apollonian_kingdom.minkowski import is_descartes

g = GaussInt
U, V, W = Vec2.of(1, 0), Vec2.of(0, -I), Vec2.of(-1, I)
IDENT = LaxLattice(Vec2.of(1, 0), Vec2.of(0, 1))


def lax(x, y):
    return lax_canonical(Vec2.of(x, y))


def test_lax_canonical_examples():
    assert lax(0, -I).v == Vec2.of(0, 1)
    assert lax(-1, I).v == Vec2.of(1, -I)
    assert lax(g(3, 2), g(3, -2)).v == Vec2.of(g(3, 2), g(3, -2))
    with pytest.raises(ValueError):
        lax(2, 0)


def test_basis_examples():
    assert is_basis(lax(1, 0), lax(0, 1))
    # (0, 2) is not primitive, so it is built without canonicalisation
    assert not is_basis(lax(1, 0), LaxVector(Vec2.of(0, 2)))
    assert is_basis(lax(g(3, 2), g(3, -2)), lax(g(5, 2), g(4, -4)))


def test_non_basis_pair():
    # (1, 0) and (1, 2) have determinant 2
    assert not is_basis(lax(1, 0), lax(1, 2))


def test_superbasis_examples():
    assert is_superbasis(lax(1, 0), lax(0, 1), lax(1, 1))
    quoted = lax(g(3, 2), g(3, -2)), lax(g(5, 2), g(4, -4)), lax(g(3, 5), g(6, -1))
    assert is_superbasis(*quoted)
    assert not is_superbasis(lax(1, 0), lax(0, 1), lax(1, 2))
    assert not is_superbasis(lax(1, 0), lax(1, 0), lax(0, 1))


def test_zero_sum_normalisation_keeps_first_vector():
    a, b, c = lax(g(3, 2), g(3, -2)), lax(g(5, 2), g(4, -4)), lax(g(3, 5), g(6, -1))
    s = superbasis_zero_sum(a, b, c)
    assert s.u == a.v
    assert s.lax() == (a, b, c)
    with pytest.raises(ValueError):
        superbasis_zero_sum(lax(1, 0), lax(0, 1), lax(1, 2))


def test_complete_wall_base_example():
    left, right = complete_wall(Superbasis(U, V, W))
    expected = [
        GaussMatrix2.of(1, 0, 0, 1),
        GaussMatrix2.of(-1, I, I, 0),
        GaussMatrix2.of(0, -I, -I, -1),
        GaussMatrix2.of(-1, I, I - 1, I),
    ]
    for m in expected:
        assert any(lattice_equal(LaxLattice.from_matrix(m), v) for v in left.vertices)
    apex = left.vertices[3]
    assert (apex.u, apex.v) == (Vec2.of(-1, I - 1), Vec2.of(I, I))
    shared = set(left.vertices[:3])
    assert shared == set(right.vertices[:3])
    assert left.vertices[3] != right.vertices[3]
    assert set(left.edges.values()) & set(right.edges.values()) == {lax_canonical(x) for x in (U, V, W)}


def chambers_to_check():
    out = []
    for m in ([1, 0, 0, -I], [g(3, 2), g(5, 2), g(3, -2), g(4, -4)], [2, 1, 1, 1]):
        mat = GaussMatrix2.of(*m)
        u, v = Vec2(mat.a, mat.c), Vec2(mat.b, mat.d)
        out.extend(complete_wall(Superbasis(u, v, -(u + v))))
    return out


@pytest.mark.parametrize("chamber", chambers_to_check())
def test_chamber_invariants(chamber):
    for k in range(4):
        assert is_superbasis(*chamber.face_labels(k))
    circles = [circle_from_lattice(v) for v in chamber.vertices]
    assert is_descartes([c.key for c in circles])
    for (i, j), label in ((tuple(p), l) for p, l in chamber.edges.items()):
        assert label == tangency_lax(circles[i], circles[j])
        assert contains_lax(chamber.vertices[i], label) and contains_lax(chamber.vertices[j], label)


def test_complete_wall_independent_of_representatives():
    base = {c.key() for c in complete_wall(Superbasis(U, V, W))}
    for e, e2, e3 in product(UNITS, UNITS, UNITS):
        try:
            s = Superbasis(e * U, e2 * V, e3 * W)
        except ValueError:
            continue
        assert {c.key() for c in complete_wall(s)} == base


def test_cross_wall_is_an_involution():
    left, right = complete_wall(Superbasis(U, V, W))
    assert cross_wall(left, 3).key() == right.key()
    for k in range(4):
        nb = cross_wall(left, k)
        back = [cross_wall(nb, j).key() for j in range(4)]
        assert left.key() in back


def test_lattice_equal_examples():
    u, v = Vec2.of(g(3, 2), g(3, -2)), Vec2.of(g(5, 2), g(4, -4))
    a = LaxLattice(u, v)
    assert lattice_equal(a, LaxLattice(u + v, v))
    assert lattice_equal(a, LaxLattice(I * u, I * v))
    assert not lattice_equal(a, LaxLattice(v, u))


def test_lattice_keys_collide_exactly_when_equal():
    mats = [GaussMatrix2.of(*m) for m in ([1, 0, 0, 1], [1, 1, 0, 1], [0, 1, 1, 0], [I, 0, 0, 1], [1, I, 0, 1], [1, 0, I, 1])]
    lats = [LaxLattice.from_matrix(m) for m in mats]
    lats += [LaxLattice(l.u + l.v, l.v) for l in lats] + [LaxLattice(l.v, l.u) for l in lats]
    for a in lats:
        for b in lats:
            assert (a.key() == b.key()) == lattice_equal(a, b)


def test_contains_lax_examples():
    assert contains_lax(IDENT, lax(1, 1))
    assert not contains_lax(IDENT, lax(1, I))
    lat = LaxLattice(Vec2.of(g(0, 5), g(5, 1)), Vec2.of(g(-4, 5), g(4, 5)))
    assert contains_lax(lat, lax(g(0, 5), g(5, 1)))


def test_court_identity_radius_one():
    rep = court_check(IDENT, 1)
    assert rep.ok
    assert {(1, 0), (0, 1), (1, 1), (1, -1)} <= rep.titles
    assert frozenset(((1, 0), (0, 1))) in rep.joined


def test_parallelogram_instance():
    f = lambda x, y: x * x + y * y  # noqa: E731
    assert f(1, 1) + f(1, -1) == 2 * f(1, 0) + 2 * f(0, 1)


@pytest.mark.parametrize("radius", [2, 3, 4])
def test_court_is_a_valence_three_tree(radius):
    rep = court_check(IDENT, radius, ((3, 1), (1, -2)))
    assert rep.ok, rep.failures
    assert rep.chambers == 3 * 2**radius - 2


def test_court_radius_is_bounded():
    with pytest.raises(ValueError):
        court_check(IDENT, 5)
