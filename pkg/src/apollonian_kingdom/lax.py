"""Lax vectors, superbases, lax lattices and ultrabasis chambers of Z[i]^2."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, product
from math import gcd
from typing import Sequence

from .gaussian import (
    I,
    ONE,
    UNITS,
    GaussInt,
    GaussMatrix2,
    IntLike,
    gauss_gcd,
    is_unit,
    mat_inverse,
)


@dataclass(frozen=True, slots=True)
class Vec2:
    x: GaussInt
    y: GaussInt

    @classmethod
    def of(cls, x: IntLike, y: IntLike) -> Vec2:
        return cls(GaussInt.coerce(x), GaussInt.coerce(y))

    def __add__(self, o: Vec2) -> Vec2:
        return Vec2(self.x + o.x, self.y + o.y)

    def __sub__(self, o: Vec2) -> Vec2:
        return Vec2(self.x - o.x, self.y - o.y)

    def __neg__(self) -> Vec2:
        return Vec2(-self.x, -self.y)

    def __rmul__(self, k: IntLike) -> Vec2:
        return Vec2(self.x * k, self.y * k)

    def __iter__(self):
        yield self.x
        yield self.y

    def is_primitive(self) -> bool:
        return bool(self.x or self.y) and is_unit(gauss_gcd(self.x, self.y))

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def det2(u: Vec2, v: Vec2) -> GaussInt:
    return u.x * v.y - u.y * v.x


@dataclass(frozen=True, slots=True)
class LaxVector:
    """Canonical representative of a primitive vector modulo {1, i, -1, -i}."""

    v: Vec2

    @property
    def x(self) -> GaussInt:
        return self.v.x

    @property
    def y(self) -> GaussInt:
        return self.v.y

    def associates(self) -> list[Vec2]:
        return [e * self.v for e in UNITS]

    def __str__(self) -> str:
        return str(self.v)


def lax_canonical(v: Vec2 | Sequence[IntLike]) -> LaxVector:
    if not isinstance(v, Vec2):
        v = Vec2.of(*v)
    if not v.is_primitive():
        raise ValueError(f"{v} is not primitive")
    e = (v.x if v.x else v.y).unit_to_canonical()
    return LaxVector(e * v)


def is_basis(a: LaxVector, b: LaxVector) -> bool:
    return is_unit(det2(a.v, b.v))


def is_superbasis(a: LaxVector, b: LaxVector, c: LaxVector) -> bool:
    if not (is_basis(a, b) and is_basis(b, c) and is_basis(a, c)):
        return False
    return _zero_sum_units(a.v, b.v, c.v) is not None


def _zero_sum_units(u: Vec2, b: Vec2, c: Vec2) -> tuple[GaussInt, GaussInt] | None:
    for e2, e3 in product(UNITS, UNITS):
        if not ((u + e2 * b + e3 * c).x or (u + e2 * b + e3 * c).y):
            return e2, e3
    return None


@dataclass(frozen=True, slots=True)
class Superbasis:
    """Representatives u, v, w of a superbasis with u + v + w == 0."""

    u: Vec2
    v: Vec2
    w: Vec2

    def __post_init__(self) -> None:
        s = self.u + self.v + self.w
        if s.x or s.y:
            raise ValueError("superbasis representatives must sum to zero")
        for p, q in ((self.u, self.v), (self.v, self.w), (self.w, self.u)):
            if not is_unit(det2(p, q)):
                raise ValueError(f"{p}, {q} do not form a basis")

    def lax(self) -> tuple[LaxVector, LaxVector, LaxVector]:
        return lax_canonical(self.u), lax_canonical(self.v), lax_canonical(self.w)


def superbasis_zero_sum(a: LaxVector, b: LaxVector, c: LaxVector) -> Superbasis:
    """Zero-sum representatives, scaled so that the first one is ``a`` itself.

    Once the first representative is fixed the remaining units are unique,
    because ``b`` and ``c`` are linearly independent.
    """
    if not is_superbasis(a, b, c):
        raise ValueError(f"{a}, {b}, {c} is not a superbasis")
    e2, e3 = _zero_sum_units(a.v, b.v, c.v)
    return Superbasis(a.v, e2 * b.v, e3 * c.v)


@dataclass(frozen=True, slots=True, eq=False)
class LaxLattice:
    """The oriented Z-span of an ordered Z[i]-basis (u, v), up to scaling by i.

    Equality is :func:`lattice_equal`; hashing goes through the associated
    circle, which is a complete invariant.
    """

    u: Vec2
    v: Vec2

    def __post_init__(self) -> None:
        if not is_unit(det2(self.u, self.v)):
            raise ValueError(f"({self.u}, {self.v}) is not a Z[i]-basis")

    @classmethod
    def from_matrix(cls, m: GaussMatrix2) -> LaxLattice:
        (a, c), (b, d) = m.columns
        return cls(Vec2(a, c), Vec2(b, d))

    @property
    def matrix(self) -> GaussMatrix2:
        return GaussMatrix2(self.u.x, self.v.x, self.u.y, self.v.y)

    def key(self):
        from .circles import circle_from_lattice

        return circle_from_lattice(self).key

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaxLattice):
            return NotImplemented
        return lattice_equal(self, other)

    def __hash__(self) -> int:
        return hash(self.key())

    def __str__(self) -> str:
        return f"[{self.u}, {self.v}]"


def _real_int_matrix(m: GaussMatrix2) -> tuple[int, int, int, int] | None:
    if not m.is_real():
        return None
    return m.a.re, m.b.re, m.c.re, m.d.re


def lattice_equal(l1: LaxLattice, l2: LaxLattice) -> bool:
    """True iff M2 = e * M1 * T with e a unit and T in SL2(Z)."""
    inv1 = mat_inverse(l1.matrix)
    for e in (ONE, I):  # -1 and -i give -T, which has the same determinant
        t = _real_int_matrix((inv1 @ l2.matrix).scale(e.conj()))
        if t is not None and t[0] * t[3] - t[1] * t[2] == 1:
            return True
    return False


def lax_coordinates(lat: LaxLattice, x: LaxVector) -> tuple[int, int] | None:
    """Integer coordinates (m, n) with m*u + n*v an associate of x, if any."""
    inv = mat_inverse(lat.matrix)
    for e in (ONE, I):
        vx, vy = e * x.x, e * x.y
        m = inv.a * vx + inv.b * vy
        n = inv.c * vx + inv.d * vy
        if m.im == 0 and n.im == 0:
            return m.re, n.re
    return None


def contains_lax(lat: LaxLattice, x: LaxVector) -> bool:
    return lax_coordinates(lat, x) is not None


class Handedness(Enum):
    LEFT = "Left"
    RIGHT = "Right"


# Vertex slots of a standard chamber built on the wall (u, v, w):
#   0: (u, iv)   1: (v, iw)   2: (w, iu)   3: apex


@dataclass(frozen=True)
class Chamber:
    vertices: tuple[LaxLattice, LaxLattice, LaxLattice, LaxLattice]
    edges: dict[frozenset[int], LaxVector] = field(hash=False)
    handedness: Handedness

    def edge(self, i: int, j: int) -> LaxVector:
        return self.edges[frozenset((i, j))]

    def face(self, k: int) -> tuple[int, int, int]:
        """Vertex indices of the wall opposite vertex k."""
        return tuple(i for i in range(4) if i != k)  # type: ignore[return-value]

    def face_labels(self, k: int) -> tuple[LaxVector, LaxVector, LaxVector]:
        a, b, c = self.face(k)
        return self.edge(a, b), self.edge(b, c), self.edge(c, a)

    def key(self) -> tuple:
        return tuple(sorted(v.key() for v in self.vertices))

    def edge_labels(self) -> set[LaxVector]:
        return set(self.edges.values())


def complete_wall(s: Superbasis) -> tuple[Chamber, Chamber]:
    """The left and right standard chambers sharing the wall {u, v, w}."""
    u, v, w = s.u, s.v, s.w
    wall = (LaxLattice(u, I * v), LaxLattice(v, I * w), LaxLattice(w, I * u))
    base_edges = {
        frozenset((0, 2)): lax_canonical(u),
        frozenset((0, 1)): lax_canonical(v),
        frozenset((1, 2)): lax_canonical(w),
    }
    left_edges = dict(base_edges)
    left_edges[frozenset((3, 0))] = lax_canonical(u + I * v)
    left_edges[frozenset((3, 1))] = lax_canonical(v + I * w)
    left_edges[frozenset((3, 2))] = lax_canonical(w + I * u)
    right_edges = dict(base_edges)
    right_edges[frozenset((3, 0))] = lax_canonical(u - I * v)
    right_edges[frozenset((3, 1))] = lax_canonical(v - I * w)
    right_edges[frozenset((3, 2))] = lax_canonical(w - I * u)
    left = Chamber((*wall, LaxLattice(w - I * v, I * u - v)), left_edges, Handedness.LEFT)
    right = Chamber((*wall, LaxLattice(w + I * v, I * u + v)), right_edges, Handedness.RIGHT)
    return left, right


def cross_wall(ch: Chamber, k: int) -> Chamber:
    """The chamber on the other side of the wall opposite vertex k."""
    s = superbasis_zero_sum(*ch.face_labels(k))
    here = ch.key()
    others = [c for c in complete_wall(s) if c.key() != here]
    if len(others) != 1:
        raise ValueError("wall completion does not reproduce the current chamber")
    return others[0]


def chamber_vertex_index(ch: Chamber, lat: LaxLattice) -> int | None:
    key = lat.key()
    for i, v in enumerate(ch.vertices):
        if v.key() == key:
            return i
    return None


def _title(c: tuple[int, int]) -> tuple[int, int]:
    m, n = c
    return (m, n) if (m > 0 or (m == 0 and n > 0)) else (-m, -n)


@dataclass
class CourtReport:
    radius: int
    chambers: int = 0
    titles: set[tuple[int, int]] = field(default_factory=set)
    joined: set[frozenset[tuple[int, int]]] = field(default_factory=set)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def court_check(
    lat: LaxLattice, radius: int, form: tuple[tuple[int, int], tuple[int, int]] = ((1, 0), (0, 1))
) -> CourtReport:
    """Walk the chambers around the vertex ``lat`` out to ``radius`` wall crossings.

    Checks that subjects carry distinct titles, that two subjects are joined
    exactly when their titles form a Z-basis of the lattice, that the chambers
    around the prince form a valence-3 tree, and that ``form`` satisfies the
    parallelogram law on every joined pair of titles.
    """
    if radius > 4:
        raise ValueError("court_check is meant for radius <= 4")
    report = CourtReport(radius)
    first, _ = complete_wall(Superbasis(lat.u, -I * lat.v, -lat.u + I * lat.v))

    depth: dict[tuple, int] = {first.key(): 0}
    chambers: dict[tuple, Chamber] = {first.key(): first}
    tree_edges: set[frozenset[tuple]] = set()
    subject_title: dict[tuple, tuple[int, int]] = {}
    queue = deque([first])
    while queue:
        ch = queue.popleft()
        ck = ch.key()
        p = chamber_vertex_index(ch, lat)
        if p is None:
            report.failures.append(f"chamber {ck} lost the prince")
            continue
        titles = []
        for s in range(4):
            if s == p:
                continue
            coords = lax_coordinates(lat, ch.edge(p, s))
            if coords is None:
                report.failures.append(f"edge {ch.edge(p, s)} is not in the prince's lattice")
                continue
            t = _title(coords)
            skey = ch.vertices[s].key()
            if subject_title.setdefault(skey, t) != t:
                report.failures.append(f"subject {skey} has two titles")
            titles.append(t)
        report.titles.update(titles)
        for t1, t2 in combinations(titles, 2):
            report.joined.add(frozenset((t1, t2)))
        if depth[ck] == radius:
            continue
        for k in range(4):
            if k == p:
                continue
            nb = cross_wall(ch, k)
            nk = nb.key()
            tree_edges.add(frozenset((ck, nk)))
            if nk not in depth:
                depth[nk] = depth[ck] + 1
                chambers[nk] = nb
                queue.append(nb)

    report.chambers = len(chambers)
    if len(set(subject_title.values())) != len(subject_title):
        report.failures.append("two subjects share a title")

    # (a) joined iff the titles form a Z-basis
    for t1, t2 in combinations(sorted(report.titles), 2):
        unimodular = abs(t1[0] * t2[1] - t1[1] * t2[0]) == 1
        if unimodular != (frozenset((t1, t2)) in report.joined):
            report.failures.append(f"titles {t1}, {t2}: joined/basis mismatch")
    for t in report.titles:
        if gcd(*t) != 1:
            report.failures.append(f"title {t} is not primitive")

    # (b) dual graph is a tree with valence 3 away from the boundary
    if len(tree_edges) != len(chambers) - 1:
        report.failures.append("dual graph is not a tree")
    degree = {k: 0 for k in chambers}
    for e in tree_edges:
        for k in e:
            degree[k] += 1
    for k, d in degree.items():
        if depth[k] < radius and d != 3:
            report.failures.append(f"interior chamber with valence {d}")

    # (c) parallelogram law
    (p_, q_), (_, r_) = form

    def f(t: tuple[int, int]) -> int:
        return p_ * t[0] * t[0] + 2 * q_ * t[0] * t[1] + r_ * t[1] * t[1]

    for pair in report.joined:
        x, y = tuple(pair)
        plus = _title((x[0] + y[0], x[1] + y[1]))
        minus = _title((x[0] - y[0], x[1] - y[1]))
        if plus in report.titles and minus in report.titles:
            if f(plus) + f(minus) != 2 * f(x) + 2 * f(y):
                report.failures.append(f"parallelogram law fails at {x}, {y}")
    return report


def explore_chambers(seed: Chamber, depth: int) -> dict[tuple, tuple[Chamber, int]]:
    """Breadth-first walk across walls; returns key -> (chamber, depth)."""
    seen: dict[tuple, tuple[Chamber, int]] = {seed.key(): (seed, 0)}
    queue = deque([seed])
    while queue:
        ch = queue.popleft()
        d = seen[ch.key()][1]
        if d == depth:
            continue
        for k in range(4):
            nb = cross_wall(ch, k)
            nk = nb.key()
            if nk not in seen:
                seen[nk] = (nb, d + 1)
                queue.append(nb)
    return seen

