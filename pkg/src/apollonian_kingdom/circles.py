"""Oriented Gaussian circles, Hermitian forms and tangency points."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .gaussian import I, GaussInt, GaussMatrix2, IntLike, ProjectivePoint, is_unit
from .lax import LaxLattice, LaxVector, Superbasis, Vec2, lax_canonical
from .minkowski import PedoeVector, mink_inner


@dataclass(frozen=True, slots=True)
class Circle:
    """An oriented Gaussian circle.

    ``b`` is the signed curvature (positive when clockwise), ``bp`` the
    co-curvature and ``z`` the curvature-centre; all three are integral and
    satisfy ``bp * b == N(z) - 1``.
    """

    b: int
    bp: int
    z: GaussInt

    def __post_init__(self) -> None:
        if self.b * self.bp != self.z.norm() - 1:
            raise ValueError(f"{self}: b*b' != N(z) - 1")
        if self.b % 2 or self.bp % 2:
            raise ValueError(f"{self}: curvature and co-curvature must be even")
        if (self.z.re + self.z.im) % 2 == 0:
            raise ValueError(f"{self}: curvature-centre must have mixed parity")

    @classmethod
    def from_pedoe(cls, v) -> Circle:
        b, bp, r, m = v
        return cls(b, bp, GaussInt(r, m))

    @property
    def key(self) -> PedoeVector:
        return PedoeVector(self.b, self.bp, self.z.re, self.z.im)

    @property
    def is_line(self) -> bool:
        return self.b == 0

    def __str__(self) -> str:
        return f"({self.b}, {self.bp}, {self.z})"


def circle_from_matrix(m: GaussMatrix2) -> Circle:
    """The oriented image of the real line (travelled rightward) under m."""
    if not is_unit(m.det()):
        raise ValueError(f"matrix {m} has non-unit determinant")
    alpha, gamma, beta, delta = m.a, m.b, m.c, m.d
    b = 2 * (beta * delta.conj()).im
    bp = 2 * (alpha * gamma.conj()).im
    z = I * (gamma * beta.conj() - alpha * delta.conj())
    return Circle(b, bp, z)


def circle_from_lattice(lat: LaxLattice) -> Circle:
    return circle_from_matrix(lat.matrix)


def reorient(c: Circle) -> Circle:
    return Circle(-c.b, -c.bp, -c.z)


# -- Hermitian forms -------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class HermitianForm:
    """The Hermitian matrix (a, b; conj(b), d)."""

    a: int
    d: int
    b: GaussInt = GaussInt(0)

    @classmethod
    def of(cls, a: int, d: int, b: IntLike = 0) -> HermitianForm:
        return cls(a, d, GaussInt.coerce(b))


CURVATURE_FORM = HermitianForm.of(0, 2)
COCURVATURE_FORM = HermitianForm.of(2, 0)
CENTRE_RE_FORM = HermitianForm.of(0, 0, 1)
CENTRE_IM_FORM = HermitianForm.of(0, 0, -I)

Vector = Union[Vec2, tuple]


def _vec(v: Vector) -> Vec2:
    return v if isinstance(v, Vec2) else Vec2.of(*v)


def herm_eval(h: HermitianForm, u: Vector, v: Vector) -> GaussInt:
    """h(u, v): linear in u, conjugate-linear in v."""
    u, v = _vec(u), _vec(v)
    cx, cy = v.x.conj(), v.y.conj()
    return h.a * u.x * cx + h.b * u.x * cy + h.b.conj() * u.y * cx + h.d * u.y * cy


def H_imag(h: HermitianForm, u: Vector, v: Vector) -> int:
    return herm_eval(h, u, v).im


def H_at_vertex(h: HermitianForm, lat: LaxLattice) -> int:
    return H_imag(h, lat.u, lat.v)


def descartes_quantity(h: HermitianForm, s: Superbasis) -> GaussInt:
    """h(w-iv, iu-v) + h(w+iv, iu+v) - h(iv, v) - h(iw, w) - h(iu, u), always real."""
    u, v, w = s.u, s.v, s.w
    return (
        herm_eval(h, w - I * v, I * u - v)
        + herm_eval(h, w + I * v, I * u + v)
        - herm_eval(h, I * v, v)
        - herm_eval(h, I * w, w)
        - herm_eval(h, I * u, u)
    )


def hermitian_descartes_sides(h: HermitianForm, s: Superbasis) -> tuple[int, int]:
    u, v, w = s.u, s.v, s.w
    lhs = H_imag(h, w - I * v, I * u - v) + H_imag(h, w + I * v, I * u + v)
    rhs = 2 * (H_imag(h, u, I * v) + H_imag(h, v, I * w) + H_imag(h, w, I * u))
    return lhs, rhs


def hermitian_descartes_check(h: HermitianForm, s: Superbasis) -> bool:
    lhs, rhs = hermitian_descartes_sides(h, s)
    return lhs == rhs


# -- tangency --------------------------------------------------------------------


def tangency_point(c1: Circle, c2: Circle) -> ProjectivePoint:
    """The common point of two externally tangent oriented circles."""
    if mink_inner(c1.key, c2.key) != -1:
        raise ValueError(f"{c1} and {c2} are not externally tangent")
    s = c1.b + c2.b
    if s == 0:
        if c1.b != 0:
            raise ValueError(f"{c1} and {c2} are the same circle")
        return ProjectivePoint.of(1, 0)
    return ProjectivePoint.of(c1.z + c2.z, s)


def tangency_lax(c1: Circle, c2: Circle) -> LaxVector:
    p = tangency_point(c1, c2)
    return lax_canonical(Vec2(p.p, p.q))


def circle_equation(c: Circle, x: Fraction, y: Fraction) -> Fraction:
    """b|x|^2 - 2 Re(conj(z) x) + b'; negative exactly on the circle's interior."""
    return c.b * (x * x + y * y) - 2 * (c.z.re * x + c.z.im * y) + c.bp


def on_circle(c: Circle, point: ProjectivePoint) -> bool:
    value = point.value()
    if value is None:
        return c.b == 0
    return circle_equation(c, *value) == 0


# -- Euclidean data --------------------------------------------------------------


@dataclass(frozen=True)
class EuclidCircle:
    centre: tuple[Fraction, Fraction]
    radius: Fraction
    clockwise: bool


@dataclass(frozen=True)
class EuclidLine:
    """Points x with normal . x == offset; the interior lies where normal . x > offset."""

    normal: tuple[int, int]
    offset: Fraction


def euclid_params(c: Circle) -> EuclidCircle | EuclidLine:
    if c.b:
        return EuclidCircle(
            (Fraction(c.z.re, c.b), Fraction(c.z.im, c.b)), Fraction(1, abs(c.b)), c.b > 0
        )
    return EuclidLine((c.z.re, c.z.im), Fraction(c.bp, 2))
