from fractions import Fraction

from hypothesis import given, strategies as st
import pytest

from apollonian_kingdom.circles import (
    COCURVATURE_FORM,
    CURVATURE_FORM,
    Circle,
    EuclidCircle,
    EuclidLine,
    HermitianForm,
    H_at_vertex,
    H_imag,
    circle_from_lattice,
    circle_from_matrix,
    euclid_params,
    herm_eval,
    hermitian_descartes_check,
    descartes_quantity,
    on_circle,
    reorient,
    tangency_lax,
    tangency_point,
)
from apollonian_kingdom.gaussian import I, UNITS, CosetClass, GaussInt, GaussMatrix2, ProjectivePoint, coset_class
from apollonian_kingdom.lax import LaxLattice, Superbasis, Vec2, lax_canonical
from apollonian_kingdom.verify import BASE_CHAMBER_MATRICES

from conftest import unit_det_matrices

g = GaussInt
BASE_LATTICES = [LaxLattice.from_matrix(m) for m in BASE_CHAMBER_MATRICES]


@pytest.mark.parametrize(
    "m,expected",
    [
        (GaussMatrix2.of(1, 0, 0, 1), Circle(0, 0, g(0, -1))),
        (GaussMatrix2.of(-1, I, I, 0), Circle(0, 2, g(0, 1))),
        (GaussMatrix2.of(-1, I, I - 1, I), Circle(2, 2, g(2, 1))),
    ],
)
def test_circle_from_matrix_examples(m, expected):
    assert circle_from_matrix(m) == expected
    assert circle_from_lattice(LaxLattice.from_matrix(m)) == expected


def test_circle_rejects_bad_data():
    with pytest.raises(ValueError):
        Circle(2, 2, g(1, 1))
    with pytest.raises(ValueError):
        circle_from_matrix(GaussMatrix2.of(2, 0, 0, 1))


def test_hermitian_examples():
    u, v = Vec2.of(g(3, 2), g(1, -1)), Vec2.of(g(5, 2), g(2, 7))
    assert H_imag(CURVATURE_FORM, u, v) == 2 * (u.y * v.y.conj()).im
    h = HermitianForm.of(5, -3, g(2, 1))
    assert H_imag(h, (1, 0), (1, 0)) == 0
    off = HermitianForm.of(0, 0, I)
    assert herm_eval(off, (1, 0), (0, 1)) == I and H_imag(off, (1, 0), (0, 1)) == 1


def test_vertex_values_on_base_chamber():
    assert [H_at_vertex(CURVATURE_FORM, lat) for lat in BASE_LATTICES] == [0, 0, 2, 2]
    assert [H_at_vertex(COCURVATURE_FORM, lat) for lat in BASE_LATTICES] == [0, 2, 0, 2]


@given(unit_det_matrices, st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))
def test_vertex_value_is_basis_independent(m, a, d, br, bi):
    h = HermitianForm.of(a, d, g(br, bi))
    lat = LaxLattice.from_matrix(m)
    assert H_at_vertex(h, lat) == H_at_vertex(h, LaxLattice(lat.u + lat.v, lat.v))
    assert H_at_vertex(h, lat) == H_at_vertex(h, LaxLattice(I * lat.u, I * lat.v))


def test_descartes_identity_examples():
    s = Superbasis(Vec2.of(1, 0), Vec2.of(0, -I), Vec2.of(-1, I))
    assert hermitian_descartes_check(CURVATURE_FORM, s)
    assert hermitian_descartes_check(HermitianForm.of(0, 0), s)
    assert descartes_quantity(CURVATURE_FORM, s).im == 0


@given(unit_det_matrices, unit_det_matrices)
def test_circle_invariant_under_orientation_preserving_basis_change(m, p):
    c = circle_from_matrix(m)
    assert circle_from_matrix(m.scale(I)) == c
    for t in ([1, 1, 0, 1], [2, 1, 1, 1], [0, -1, 1, 0]):
        assert circle_from_matrix(m @ GaussMatrix2.of(*t)) == c
    assert circle_from_matrix(m @ GaussMatrix2.of(0, 1, 1, 0)) == reorient(c)
    z = c.z
    assert (coset_class(m) is CosetClass.PSL) == (z.re % 2 == 0 and z.im % 2 == 1)


def test_tangency_examples():
    line = Circle(0, 0, g(0, -1))
    small = Circle(2, 0, g(0, 1))
    assert tangency_point(small, line) == ProjectivePoint.of(0, 1)
    # (2+2i)/4 = (1+i)/2 reduces to the primitive pair (1, 1-i)
    p = tangency_point(Circle(2, 2, g(2, 1)), small)
    assert p == ProjectivePoint.of(1, g(1, -1))
    assert p.value() == (Fraction(1, 2), Fraction(1, 2))
    assert tangency_point(line, Circle(0, 2, g(0, 1))).is_infinity
    with pytest.raises(ValueError):
        tangency_point(small, Circle(2, 8, g(4, 1)))


def test_quoted_tangency_label():
    # (8, 8, 4+7i) and (18, 18, 6+17i) from the strip packing touch at (5+12i)/13
    a, b = Circle(8, 8, g(4, 7)), Circle(18, 18, g(6, 17))
    assert tangency_point(a, b).value() == (Fraction(5, 13), Fraction(12, 13))
    assert tangency_lax(a, b) == lax_canonical(Vec2.of(g(3, 2), g(3, -2)))


@given(unit_det_matrices)
def test_tangency_point_lies_on_both_circles(m):
    # the real line and the image of the line Im z = 1 under m are tangent
    c1 = circle_from_matrix(m)
    c2 = circle_from_matrix(m @ GaussMatrix2.of(-1, I, I, 0))
    p = tangency_point(c1, c2)
    assert on_circle(c1, p) and on_circle(c2, p)
    assert (c1.z.re + c1.z.im) % 2 == (c2.z.re + c2.z.im) % 2 == 1


def test_euclid_params():
    assert euclid_params(Circle(2, 0, g(0, 1))) == EuclidCircle((Fraction(0), Fraction(1, 2)), Fraction(1, 2), True)
    # the real axis: -y == 0
    assert euclid_params(Circle(0, 0, g(0, -1))) == EuclidLine((0, -1), Fraction(0))
    # golden: the line Im z = 1 carries co-curvature 2
    assert euclid_params(Circle(0, 2, g(0, 1))) == EuclidLine((0, 1), Fraction(1))
    neg = euclid_params(Circle(-2, 0, g(0, -1)))
    assert neg.radius == Fraction(1, 2) and not neg.clockwise


def test_reorient():
    c = Circle(2, 0, g(0, 1))
    assert reorient(c) == Circle(-2, 0, g(0, -1))
    assert reorient(reorient(c)) == c
