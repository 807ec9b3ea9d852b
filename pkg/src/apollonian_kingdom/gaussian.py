"""Exact arithmetic in Z[i]: scalars, 2x2 matrices, projective points."""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Union

IntLike = Union[int, "GaussInt"]


def _round_half_down(num: int, den: int) -> int:
    """Nearest integer to num/den (den > 0), ties toward -infinity."""
    return -((den - 2 * num) // (2 * den))


@dataclass(frozen=True, slots=True, eq=False)
class GaussInt:
    re: int
    im: int = 0

    def __eq__(self, other: object) -> bool:
        o = _maybe(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        # agree with int hashing so that GaussInt(n) and n are interchangeable keys
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    @classmethod
    def coerce(cls, x: IntLike) -> GaussInt:
        if isinstance(x, GaussInt):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {x!r} to GaussInt")

    @classmethod
    def parse(cls, text: str) -> GaussInt:
        """Parse strings such as ``3``, ``-2i``, ``3+2i``, ``1-i``."""
        s = text.replace(" ", "").replace("I", "i").replace("j", "i")
        m = re.fullmatch(r"(?:([+-]?\d+)(?=[+-]|$))?(?:([+-]?\d*)i)?", s)
        if not s or m is None:
            raise ValueError(f"not a Gaussian integer: {text!r}")
        real, imag = m.groups()
        re_part = int(real) if real else 0
        if imag is None:
            im_part = 0
        elif imag in ("", "+", "-"):
            im_part = -1 if imag == "-" else 1
        else:
            im_part = int(imag)
        return cls(re_part, im_part)

    def __add__(self, other: IntLike) -> GaussInt:
        o = _maybe(other)
        if o is None:
            return NotImplemented
        return GaussInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: IntLike) -> GaussInt:
        o = _maybe(other)
        if o is None:
            return NotImplemented
        return GaussInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: IntLike) -> GaussInt:
        return GaussInt.coerce(other) - self

    def __neg__(self) -> GaussInt:
        return GaussInt(-self.re, -self.im)

    def __mul__(self, other: IntLike) -> GaussInt:
        o = _maybe(other)
        if o is None:
            return NotImplemented
        return GaussInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conj(self) -> GaussInt:
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def divmod(self, other: IntLike) -> tuple[GaussInt, GaussInt]:
        """Euclidean division with nearest-integer quotient."""
        o = GaussInt.coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Z[i]")
        num = self * o.conj()
        q = GaussInt(_round_half_down(num.re, n), _round_half_down(num.im, n))
        return q, self - q * o

    def __mod__(self, other: IntLike) -> GaussInt:
        return self.divmod(other)[1]

    def divides(self, other: IntLike) -> bool:
        o = GaussInt.coerce(other)
        if not self:
            return not o
        return not (o % self)

    def exact_div(self, other: IntLike) -> GaussInt:
        o = GaussInt.coerce(other)
        q, r = self.divmod(o)
        if r:
            raise ValueError(f"{o} does not divide {self}")
        return q

    def canonical(self) -> GaussInt:
        """The associate with re > 0 and im >= 0 (zero maps to zero)."""
        x = self
        for _ in range(4):
            if x.re > 0 and x.im >= 0:
                return x
            x = x * I
        return x

    def unit_to_canonical(self) -> GaussInt:
        """The unit e with e * self == self.canonical()."""
        e = ONE
        for _ in range(4):
            x = self * e
            if x.re > 0 and x.im >= 0:
                return e
            e = e * I
        if not self:
            return ONE
        raise AssertionError("unreachable")

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        im = {1: "i", -1: "-i"}.get(self.im, f"{self.im}i")
        if self.re == 0:
            return im
        sign = "" if im.startswith("-") else "+"
        return f"{self.re}{sign}{im}"

    def __repr__(self) -> str:
        return f"GaussInt({self.re}, {self.im})"


def _maybe(x) -> GaussInt | None:
    if isinstance(x, GaussInt):
        return x
    if isinstance(x, int):
        return GaussInt(x, 0)
    return None


ZERO = GaussInt(0, 0)
ONE = GaussInt(1, 0)
I = GaussInt(0, 1)
UNITS: tuple[GaussInt, ...] = (ONE, I, -ONE, -I)


def is_unit(a: IntLike) -> bool:
    return GaussInt.coerce(a).norm() == 1


def gauss_gcd(a: IntLike, b: IntLike) -> GaussInt:
    """Greatest common divisor, normalized to its canonical associate."""
    x, y = GaussInt.coerce(a), GaussInt.coerce(b)
    if not x and not y:
        raise ValueError("gcd(0, 0) is undefined")
    while y:
        x, y = y, x % y
    return x.canonical()


def gauss_xgcd(a: IntLike, b: IntLike) -> tuple[GaussInt, GaussInt, GaussInt]:
    """Return (g, s, t) with s*a + t*b == g == gauss_gcd(a, b)."""
    x, y = GaussInt.coerce(a), GaussInt.coerce(b)
    if not x and not y:
        raise ValueError("gcd(0, 0) is undefined")
    s0, s1, t0, t1 = ONE, ZERO, ZERO, ONE
    while y:
        q, r = x.divmod(y)
        x, y = y, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    e = x.unit_to_canonical()
    return x * e, s0 * e, t0 * e


def rational_parts(num: GaussInt, den: GaussInt) -> tuple[Fraction, Fraction]:
    """Real and imaginary parts of num/den as exact fractions."""
    n = den.norm()
    if n == 0:
        raise ZeroDivisionError("division by zero in Q(i)")
    p = num * den.conj()
    return Fraction(p.re, n), Fraction(p.im, n)


@dataclass(frozen=True, slots=True)
class ProjectivePoint:
    """A point of P^1(Q(i)) as a coprime pair (p, q); (1, 0) is infinity.

    Always built through :meth:`of`, which divides out the gcd and rotates the
    first nonzero coordinate into the canonical quadrant.
    """

    p: GaussInt
    q: GaussInt

    @classmethod
    def of(cls, p: IntLike, q: IntLike) -> ProjectivePoint:
        p, q = GaussInt.coerce(p), GaussInt.coerce(q)
        g = gauss_gcd(p, q)
        p, q = p.exact_div(g), q.exact_div(g)
        e = (p if p else q).unit_to_canonical()
        return cls(p * e, q * e)

    @classmethod
    def from_fraction(cls, re: Fraction, im: Fraction) -> ProjectivePoint:
        re, im = Fraction(re), Fraction(im)
        d = re.denominator * im.denominator
        return cls.of(GaussInt(int(re * d), int(im * d)), d)

    @property
    def is_infinity(self) -> bool:
        return not self.q

    def value(self) -> tuple[Fraction, Fraction] | None:
        """The point p/q as exact (re, im), or None at infinity."""
        if self.is_infinity:
            return None
        return rational_parts(self.p, self.q)

    def __iter__(self) -> Iterator[GaussInt]:
        yield self.p
        yield self.q

    def __str__(self) -> str:
        return f"({self.p}, {self.q})"


INFINITY = ProjectivePoint(ONE, ZERO)


class CosetClass(Enum):
    PSL = "PSL"
    NON_PSL = "NonPSL"


@dataclass(frozen=True, slots=True)
class GaussMatrix2:
    """The matrix (a b; c d); columns are (a, c) and (b, d)."""

    a: GaussInt
    b: GaussInt
    c: GaussInt
    d: GaussInt

    @classmethod
    def of(cls, a: IntLike, b: IntLike, c: IntLike, d: IntLike) -> GaussMatrix2:
        return cls(*(GaussInt.coerce(x) for x in (a, b, c, d)))

    @classmethod
    def from_columns(cls, col1, col2) -> GaussMatrix2:
        return cls.of(col1[0], col2[0], col1[1], col2[1])

    @classmethod
    def parse(cls, text: str) -> GaussMatrix2:
        parts = [p for p in text.split(",")]
        if len(parts) != 4:
            raise ValueError(f"expected four comma-separated entries, got {text!r}")
        return cls.of(*(GaussInt.parse(p) for p in parts))

    @property
    def columns(self) -> tuple[tuple[GaussInt, GaussInt], tuple[GaussInt, GaussInt]]:
        return (self.a, self.c), (self.b, self.d)

    def det(self) -> GaussInt:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: GaussMatrix2) -> GaussMatrix2:
        return mat_mul(self, other)

    def scale(self, e: IntLike) -> GaussMatrix2:
        return GaussMatrix2(self.a * e, self.b * e, self.c * e, self.d * e)

    def is_real(self) -> bool:
        return not (self.a.im or self.b.im or self.c.im or self.d.im)

    def canonical(self) -> GaussMatrix2:
        """Representative of the class modulo units (for hashing in PGL2)."""
        first = next(x for x in (self.a, self.b, self.c, self.d) if x)
        return self.scale(first.unit_to_canonical())

    def __str__(self) -> str:
        return f"({self.a} {self.b}; {self.c} {self.d})"


IDENTITY = GaussMatrix2.of(1, 0, 0, 1)


def mat_mul(m: GaussMatrix2, n: GaussMatrix2) -> GaussMatrix2:
    return GaussMatrix2(
        m.a * n.a + m.b * n.c,
        m.a * n.b + m.b * n.d,
        m.c * n.a + m.d * n.c,
        m.c * n.b + m.d * n.d,
    )


def mat_det(m: GaussMatrix2) -> GaussInt:
    return m.det()


def _require_unit_det(m: GaussMatrix2) -> GaussInt:
    det = m.det()
    if not is_unit(det):
        raise ValueError(f"matrix {m} has non-unit determinant {det}")
    return det


def mat_inverse(m: GaussMatrix2) -> GaussMatrix2:
    det = _require_unit_det(m)
    inv_det = det.conj()  # units: inverse is the conjugate
    return GaussMatrix2(m.d * inv_det, -m.b * inv_det, -m.c * inv_det, m.a * inv_det)


def mobius_apply(m: GaussMatrix2, x: ProjectivePoint) -> ProjectivePoint:
    _require_unit_det(m)
    return ProjectivePoint.of(m.a * x.p + m.b * x.q, m.c * x.p + m.d * x.q)


def coset_class(m: GaussMatrix2) -> CosetClass:
    det = _require_unit_det(m)
    return CosetClass.PSL if det.im == 0 else CosetClass.NON_PSL


def pgl_equal(m: GaussMatrix2, n: GaussMatrix2) -> bool:
    """Equality in PGL2(Z[i]): n is a unit multiple of m."""
    return any(m.scale(e) == n for e in UNITS)
