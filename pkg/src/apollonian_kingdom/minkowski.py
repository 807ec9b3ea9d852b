"""Pedoe embedding of oriented circles into Minkowski space, Descartes
quadruples, and the spinor map PGL2(Z[i]) -> SO+(1,3)(Z)."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import TYPE_CHECKING, NamedTuple, Sequence

from .gaussian import GaussInt, GaussMatrix2, is_unit

if TYPE_CHECKING:
    from .circles import Circle


class PedoeVector(NamedTuple):
    """(curvature, co-curvature, Re z, Im z) of an oriented circle."""

    b: int
    bp: int
    r: int
    m: int

    def __neg__(self) -> PedoeVector:
        return PedoeVector(-self.b, -self.bp, -self.r, -self.m)


Quadruple = tuple[PedoeVector, PedoeVector, PedoeVector, PedoeVector]

HALF = Fraction(1, 2)
MINKOWSKI: tuple[tuple[Fraction, ...], ...] = (
    (Fraction(0), -HALF, Fraction(0), Fraction(0)),
    (-HALF, Fraction(0), Fraction(0), Fraction(0)),
    (Fraction(0), Fraction(0), Fraction(1), Fraction(0)),
    (Fraction(0), Fraction(0), Fraction(0), Fraction(1)),
)
DESCARTES_GRAM: tuple[tuple[int, ...], ...] = tuple(
    tuple(1 if i == j else -1 for j in range(4)) for i in range(4)
)
TIME = PedoeVector(1, 1, 0, 0)

BASE_QUADRUPLE: Quadruple = (
    PedoeVector(0, 0, 0, -1),
    PedoeVector(0, 2, 0, 1),
    PedoeVector(2, 2, 2, 1),
    PedoeVector(2, 0, 0, 1),
)


# -- small exact linear algebra ------------------------------------------------


def _matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def _transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)]


def int_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rat_inverse(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(rows)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [r[n:] for r in a]


def quadruple_matrix(q: Sequence[PedoeVector]) -> list[list[int]]:
    """The 4x4 matrix whose columns are the Pedoe vectors of q."""
    return _transpose([list(v) for v in q])


# -- Pedoe vectors ---------------------------------------------------------------


def pedoe(c: Circle) -> PedoeVector:
    return PedoeVector(c.b, c.bp, c.z.re, c.z.im)


def mink_inner(v1: Sequence[int], v2: Sequence[int]) -> Fraction:
    b1, bp1, r1, m1 = v1
    b2, bp2, r2, m2 = v2
    return Fraction(-(b1 * bp2 + bp1 * b2), 2) + r1 * r2 + m1 * m2


def _as_vector(x) -> PedoeVector:
    return x if isinstance(x, tuple) else x.key


class PairRelation(Enum):
    EXTERNALLY_TANGENT = "ExternallyTangent"
    INTERNALLY_TANGENT = "InternallyTangent"
    ORTHOGONAL = "Orthogonal"
    MEETING = "Meeting"
    DISJOINT = "Disjoint"


@dataclass(frozen=True)
class PairClass:
    relation: PairRelation
    cos: Fraction


def classify_pair(c1, c2) -> PairClass:
    """Classify two oriented circles (or Pedoe vectors) by their inner product."""
    x = mink_inner(_as_vector(c1), _as_vector(c2))
    if x == -1:
        rel = PairRelation.EXTERNALLY_TANGENT
    elif x == 1:
        rel = PairRelation.INTERNALLY_TANGENT
    elif x == 0:
        rel = PairRelation.ORTHOGONAL
    elif abs(x) < 1:
        rel = PairRelation.MEETING
    else:
        rel = PairRelation.DISJOINT
    return PairClass(rel, x)


# -- Descartes quadruples --------------------------------------------------------


def gram(q: Sequence[PedoeVector]) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(mink_inner(vi, vj) for vj in q) for vi in q)


def is_descartes(q: Sequence[PedoeVector]) -> bool:
    return len(q) == 4 and gram(q) == DESCARTES_GRAM


def descartes_scalar_check(a: int, b: int, c: int, d: int) -> bool:
    """The quadratic Descartes relation on four curvatures."""
    return 2 * (a * a + b * b + c * c + d * d) == (a + b + c + d) ** 2


def descartes_complement(a: int, b: int, c: int, d: int) -> int:
    """The other curvature completing (a, b, c), by the linear relation."""
    return 2 * (a + b + c) - d


def swap(q: Sequence[PedoeVector], i: int) -> Quadruple:
    """Replace the i-th circle by the other completion of the remaining three."""
    if not is_descartes(q):
        raise ValueError("swap needs a Descartes quadruple")
    return _swap_unchecked(q, i)


def _swap_unchecked(q: Sequence[PedoeVector], i: int) -> Quadruple:
    others = [v for j, v in enumerate(q) if j != i]
    new = PedoeVector(*(2 * sum(col) - x for col, x in zip(zip(*others), q[i])))
    out = list(q)
    out[i] = new
    return tuple(out)  # type: ignore[return-value]


def ordering_sign(q: Sequence[PedoeVector]) -> int:
    det = int_det(quadruple_matrix(q))
    if abs(det) != 8:
        raise ValueError(f"quadruple matrix has determinant {det}, expected +-8")
    return 1 if det > 0 else -1


def positively_ordered(q: Sequence[PedoeVector]) -> Quadruple:
    """q itself, or q with its first two circles transposed."""
    if ordering_sign(q) > 0:
        return tuple(q)  # type: ignore[return-value]
    return (q[1], q[0], q[2], q[3])


# -- Lorentz matrices and the spinor map -----------------------------------------


@dataclass(frozen=True)
class LorentzMatrix:
    rows: tuple[tuple[int, int, int, int], ...]

    @classmethod
    def identity(cls) -> LorentzMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(4)) for i in range(4)))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]]) -> LorentzMatrix:
        return cls(tuple(tuple(int(x) for x in r) for r in zip(*cols)))

    def __matmul__(self, other):
        if isinstance(other, LorentzMatrix):
            return LorentzMatrix(tuple(tuple(r) for r in _matmul(self.rows, other.rows)))
        v = tuple(other)
        return PedoeVector(*(sum(a * x for a, x in zip(row, v)) for row in self.rows))

    def transpose(self) -> LorentzMatrix:
        return LorentzMatrix(tuple(tuple(r) for r in _transpose(self.rows)))

    def det(self) -> int:
        return int_det(self.rows)

    def preserves_form(self) -> bool:
        return tuple(map(tuple, _matmul(_matmul(_transpose(self.rows), MINKOWSKI), self.rows))) == MINKOWSKI

    def is_orthochronous(self) -> bool:
        image = self @ TIME
        return image.b + image.bp > 0

    def is_proper_orthochronous(self) -> bool:
        return self.preserves_form() and self.det() == 1 and self.is_orthochronous()


def _hermitian(v: Sequence[int]) -> tuple[GaussInt, GaussInt, GaussInt, GaussInt]:
    b, bp, r, m = v
    return GaussInt(bp), GaussInt(r, m), GaussInt(r, -m), GaussInt(b)


def _hermitian_action(mat: GaussMatrix2, v: Sequence[int]) -> PedoeVector:
    """Read (b, b', Re z, Im z) off M H conj(M)^T."""
    h11, h12, h21, h22 = _hermitian(v)
    a, b, c, d = mat.a, mat.b, mat.c, mat.d
    # M H
    x11, x12 = a * h11 + b * h21, a * h12 + b * h22
    x21, x22 = c * h11 + d * h21, c * h12 + d * h22
    # (M H) conj(M)^T
    y11 = x11 * a.conj() + x12 * b.conj()
    y12 = x11 * c.conj() + x12 * d.conj()
    y22 = x21 * c.conj() + x22 * d.conj()
    assert y11.im == 0 and y22.im == 0
    return PedoeVector(y22.re, y11.re, y12.re, y12.im)


def spinor(mat: GaussMatrix2) -> LorentzMatrix:
    """The Lorentz matrix N with pedoe(M.C) == N @ pedoe(C) for every circle C.

    Unit determinants have norm one, so the Hermitian action needs no rescaling
    and N is integral.
    """
    if not is_unit(mat.det()):
        raise ValueError(f"matrix {mat} has non-unit determinant")
    basis = [tuple(int(i == j) for j in range(4)) for i in range(4)]
    return LorentzMatrix.from_columns([_hermitian_action(mat, e) for e in basis])


def lorentz_apply(n: LorentzMatrix, v: Sequence[int]) -> PedoeVector:
    return n @ v


def apply_to_quadruple(n: LorentzMatrix, q: Sequence[PedoeVector]) -> Quadruple:
    return tuple(n @ v for v in q)  # type: ignore[return-value]


def relate_quadruples(a: Sequence[PedoeVector], b: Sequence[PedoeVector]) -> LorentzMatrix:
    """The unique proper orthochronous N with N @ B == A."""
    for q in (a, b):
        if not is_descartes(q):
            raise ValueError("relate_quadruples needs Descartes quadruples")
        if ordering_sign(q) != 1:
            raise ValueError("relate_quadruples needs positively ordered quadruples")
    am, bm = quadruple_matrix(a), quadruple_matrix(b)
    n = _matmul(am, rat_inverse(bm))
    if any(x.denominator != 1 for row in n for x in row):
        raise ValueError("A B^-1 is not integral")
    lm = LorentzMatrix(tuple(tuple(int(x) for x in row) for row in n))
    if lm.det() != 1 or not lm.preserves_form() or _matmul(lm.rows, bm) != am:
        raise ValueError("A B^-1 is not a proper Lorentz transformation")
    return lm
