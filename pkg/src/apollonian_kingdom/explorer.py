"""Generation of packings (palaces), the chamber graph, strip/coset packings
and the superpacking, plus lockstep verification of the two routes."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .circles import Circle, circle_from_lattice, tangency_lax
from .gaussian import I, IDENTITY, GaussMatrix2, mat_inverse, pgl_equal
from .lax import (
    Chamber,
    LaxVector,
    Superbasis,
    Vec2,
    complete_wall,
    contains_lax,
    explore_chambers,
    is_superbasis,
)
from .minkowski import (
    BASE_QUADRUPLE,
    PedoeVector,
    Quadruple,
    _swap_unchecked,
    is_descartes,
    spinor,
)

log = logging.getLogger(__name__)

Key = tuple[PedoeVector, ...]


# -- windows and exact region tests ----------------------------------------------


@dataclass(frozen=True)
class Window:
    x0: Fraction
    y0: Fraction
    x1: Fraction
    y1: Fraction

    def __post_init__(self) -> None:
        if not (self.x0 < self.x1 and self.y0 < self.y1):
            raise ValueError("window must have positive width and height")

    @classmethod
    def of(cls, x0, y0, x1, y1) -> Window:
        return cls(Fraction(x0), Fraction(y0), Fraction(x1), Fraction(y1))

    @classmethod
    def parse(cls, text: str) -> Window:
        parts = text.split(",")
        if len(parts) != 4:
            raise ValueError(f"window needs four numbers x0,y0,x1,y1, got {text!r}")
        return cls.of(*(Fraction(p.strip()) for p in parts))

    def corners(self) -> list[tuple[Fraction, Fraction]]:
        return [(x, y) for x in (self.x0, self.x1) for y in (self.y0, self.y1)]

    def clamp(self, x: Fraction, y: Fraction) -> tuple[Fraction, Fraction]:
        return min(max(x, self.x0), self.x1), min(max(y, self.y0), self.y1)

    def dist2(self, x: Fraction, y: Fraction) -> Fraction:
        cx, cy = self.clamp(x, y)
        return (x - cx) ** 2 + (y - cy) ** 2

    def inflate(self, d: Fraction) -> Window:
        return Window(self.x0 - d, self.y0 - d, self.x1 + d, self.y1 + d)

    def __str__(self) -> str:
        return f"{self.x0},{self.y0},{self.x1},{self.y1}"


def circle_value(v: Sequence, x: Fraction, y: Fraction) -> Fraction:
    """b|x|^2 - 2 Re(conj(z) x) + b' for a (possibly half-integral) Pedoe vector."""
    b, bp, r, m = v
    return b * (x * x + y * y) - 2 * (r * x + m * y) + bp


def value_range(v: Sequence, win: Window) -> tuple[Fraction, Fraction]:
    """Exact (min, max) of :func:`circle_value` over the closed window."""
    corner_vals = [circle_value(v, x, y) for x, y in win.corners()]
    b = v[0]
    if b == 0:
        return min(corner_vals), max(corner_vals)
    near = circle_value(v, *win.clamp(Fraction(v[2]) / b, Fraction(v[3]) / b))
    if b > 0:
        return near, max(corner_vals)
    return min(corner_vals), near


def meets_window(v: Sequence, win: Window) -> bool:
    """Whether the circle itself (not its disk) passes through the window."""
    lo, hi = value_range(v, win)
    return lo <= 0 <= hi


def _region_may_meet(shared: Sequence[PedoeVector], old: PedoeVector, new: PedoeVector, win: Window) -> bool:
    """Whether the interstice that holds ``new`` (and everything nested below it)
    can reach the window.

    The interstice is bounded by the three shared circles and lies on one side
    of their orthogonal (dual) circle; ``new`` fixes which side.
    """
    if new.b == 0:
        return True
    dual = tuple(Fraction(sum(col) - o, 2) for col, o in zip(zip(*shared), old))
    side = circle_value(dual, Fraction(new.r, new.b), Fraction(new.m, new.b))
    lo, hi = value_range(dual, win)
    return hi >= 0 if side > 0 else lo <= 0


# -- configuration and output ----------------------------------------------------


class Mode(Enum):
    PALACE = "palace"
    SUPERPACKING = "superpacking"


@dataclass(frozen=True)
class ExplorationConfig:
    """Bounds for a generation run; ``None`` leaves that bound off."""

    max_curvature: int | None = None
    max_depth: int | None = None
    window: Window | None = None
    mode: Mode = Mode.PALACE

    def __post_init__(self) -> None:
        if self.max_curvature is not None and self.max_curvature <= 0:
            raise ValueError("max_curvature must be positive")
        if self.max_depth is not None and self.max_depth < 0:
            raise ValueError("max_depth must be non-negative")
        if self.max_curvature is None and self.max_depth is None:
            raise ValueError("need a curvature or depth bound")

    def too_curved(self, new: PedoeVector) -> bool:
        """Whether a freshly placed circle (and so its whole branch) is beyond
        the curvature bound.

        Every circle later placed in the same interstice is smaller than the
        one just inscribed there, so the branch can be cut as soon as its first
        circle exceeds the bound.  This also covers quadruples containing a
        line, which a bound on the smallest curvature alone never prunes.
        """
        k = self.max_curvature
        return k is not None and new.b > k


@dataclass
class PalaceGraph:
    vertices: dict[PedoeVector, Circle] = field(default_factory=dict)
    edges: dict[frozenset[PedoeVector], LaxVector] = field(default_factory=dict)
    chambers: dict[Key, int] = field(default_factory=dict)

    def add_chamber(self, q: Sequence[PedoeVector], depth: int) -> None:
        key = tuple(sorted(q))
        if key in self.chambers:
            return
        self.chambers[key] = depth
        circles = [self.vertices.setdefault(v, Circle.from_pedoe(v)) for v in q]
        for i in range(4):
            for j in range(i + 1, 4):
                pair = frozenset((q[i], q[j]))
                if pair not in self.edges:
                    self.edges[pair] = tangency_lax(circles[i], circles[j])

    def circles(self) -> list[Circle]:
        return [self.vertices[k] for k in sorted(self.vertices)]

    def circles_within(self, max_curvature: int | None = None, window: Window | None = None) -> list[Circle]:
        out = []
        for k in sorted(self.vertices):
            if max_curvature is not None and abs(k.b) > max_curvature:
                continue
            if window is not None and not meets_window(k, window):
                continue
            out.append(self.vertices[k])
        return out


# -- palace by swaps -------------------------------------------------------------


def explore_palace(seed: Sequence[PedoeVector], cfg: ExplorationConfig) -> PalaceGraph:
    """Breadth-first closure of ``seed`` under the four swaps.

    A quadruple is dropped when the circle it adds exceeds the curvature
    bound, or when the interstice that circle sits in cannot reach the window;
    both tests hold for everything generated further down that branch.
    """
    seed = tuple(PedoeVector(*v) for v in seed)
    if not is_descartes(seed):
        raise ValueError("seed is not a Descartes quadruple")
    graph = PalaceGraph()
    graph.add_chamber(seed, 0)
    queue: deque[tuple[Quadruple, int, int]] = deque([(seed, 0, -1)])
    while queue:
        q, depth, came_from = queue.popleft()
        if cfg.max_depth is not None and depth >= cfg.max_depth:
            continue
        for i in range(4):
            if i == came_from:
                continue
            nq = _swap_unchecked(q, i)
            if tuple(sorted(nq)) in graph.chambers or cfg.too_curved(nq[i]):
                continue
            if cfg.window is not None:
                shared = [v for j, v in enumerate(q) if j != i]
                if not _region_may_meet(shared, q[i], nq[i], cfg.window):
                    continue
            graph.add_chamber(nq, depth + 1)
            queue.append((nq, depth + 1, i))
    return graph


# -- chambers of the kingdom -----------------------------------------------------

BASE_WALL = Superbasis(Vec2.of(1, 0), Vec2.of(0, -I), Vec2.of(-1, I))


def base_chamber() -> Chamber:
    return complete_wall(BASE_WALL)[0]


def explore_kingdom_algebraic(seed: Chamber, depth: int) -> dict[Key, tuple[Chamber, int]]:
    """Chambers reached from ``seed`` by crossing at most ``depth`` walls."""
    return explore_chambers(seed, depth)


@dataclass
class LockstepReport:
    depth: int
    chambers: int = 0
    vertices: int = 0
    per_depth: dict[int, int] = field(default_factory=dict)
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def lockstep_verify(depth: int) -> LockstepReport:
    """Grow the kingdom from the base chamber and the palace from the base
    quadruple to the same depth and compare them chamber by chamber."""
    if depth > 8:
        raise ValueError("lockstep_verify is meant for depth <= 8")
    report = LockstepReport(depth)
    kingdom = explore_kingdom_algebraic(base_chamber(), depth)
    palace = explore_palace(BASE_QUADRUPLE, ExplorationConfig(max_depth=depth))

    def fail(msg: str) -> None:
        if len(report.mismatches) < 20:
            report.mismatches.append(msg)

    lattice_keys = set()
    for key, (ch, d) in kingdom.items():
        report.per_depth[d] = report.per_depth.get(d, 0) + 1
        circles = [circle_from_lattice(v) for v in ch.vertices]
        keys = [c.key for c in circles]
        lattice_keys.update(keys)
        if not is_descartes(keys):
            fail(f"chamber {key}: vertex circles are not a Descartes quadruple")
        if palace.chambers.get(key) != d:
            fail(f"chamber {key} at depth {d} missing from the palace")
        for k in range(4):
            if not is_superbasis(*ch.face_labels(k)):
                fail(f"chamber {key}: face {k} is not a superbasis")
        for pair, label in ch.edges.items():
            i, j = tuple(pair)
            if palace.edges.get(frozenset((keys[i], keys[j]))) != label:
                fail(f"chamber {key}: edge {label} disagrees with the tangency point")
            for v in (i, j):
                if not contains_lax(ch.vertices[v], label):
                    fail(f"chamber {key}: vertex {v} lattice misses label {label}")
    if set(palace.chambers) != set(kingdom):
        fail(f"palace has {len(palace.chambers)} chambers, kingdom has {len(kingdom)}")
    if lattice_keys != set(palace.vertices):
        fail("vertex sets differ")
    report.chambers = len(kingdom)
    report.vertices = len(lattice_keys)
    return report


# -- strip and coset packings through the group --------------------------------

G1 = GaussMatrix2.of(1, 0, 1, 1)
G2 = GaussMatrix2.of(0, I, I, 1)
G1_INV = mat_inverse(G1)
G2_INV = mat_inverse(G2)

# Named elements of the relation check; A swaps the base quadruple with a
# neighbour, B and C rotate it about two of its vertices, D = C^-1 A.
REL_A = GaussMatrix2.of(0, -1, 1, 0)
REL_B = G2
REL_C = GaussMatrix2.of(1, -1, 1, 0)
REL_D = mat_inverse(REL_C) @ REL_A


def word(*mats: GaussMatrix2) -> GaussMatrix2:
    out = IDENTITY
    for m in mats:
        out = out @ m
    return out


def strip_relation_holds() -> bool:
    """A == B^-1 D B D^-1 B^-1 D B in PGL2(Z[i]), and D is the generator G1."""
    b, d = REL_B, REL_D
    bi, di = mat_inverse(b), mat_inverse(d)
    rhs = word(bi, d, b, di, bi, d, b)
    return pgl_equal(REL_A, rhs) and pgl_equal(d, G1)


def _gamma_words() -> tuple[GaussMatrix2, list[GaussMatrix2]]:
    """The swap A and the 12 rotations of the base chamber, as words in G1, G2."""
    swap_a = word(G2_INV, G1, G2, G1_INV, G2_INV, G1, G2)
    rot_c = swap_a @ G1_INV
    rotations = [IDENTITY.canonical()]
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for g in frontier:
            for h in (G2, rot_c):
                x = (g @ h).canonical()
                if x not in rotations:
                    rotations.append(x)
                    nxt.append(x)
        frontier = nxt
    return swap_a, rotations


REAL_LINE = PedoeVector(0, 0, 0, -1)


def _orbit_packing(start: GaussMatrix2, cfg: ExplorationConfig) -> PalaceGraph:
    swap_a, rotations = _gamma_words()
    moves = [r @ swap_a for r in rotations]

    def chamber_of(g: GaussMatrix2) -> tuple[PedoeVector, ...]:
        return tuple(sorted({spinor(g @ r) @ REAL_LINE for r in rotations}))

    graph = PalaceGraph()
    root = chamber_of(start)
    if len(root) != 4:
        raise AssertionError("rotation words do not fix the base chamber")
    graph.add_chamber(root, 0)
    queue = deque([(start, root, 0)])
    while queue:
        g, here, depth = queue.popleft()
        if cfg.max_depth is not None and depth >= cfg.max_depth:
            continue
        for m in moves:
            h = g @ m
            there = chamber_of(h)
            if there in graph.chambers:
                continue
            old = [v for v in here if v not in there]
            new = [v for v in there if v not in here]
            if len(old) != 1 or len(new) != 1:
                raise AssertionError("swap word did not move to an adjacent chamber")
            if cfg.too_curved(new[0]):
                continue
            if cfg.window is not None:
                shared = [v for v in here if v in there]
                if not _region_may_meet(shared, old[0], new[0], cfg.window):
                    continue
            graph.add_chamber(there, depth + 1)
            queue.append((h, there, depth + 1))
    return graph


def strip_packing(cfg: ExplorationConfig) -> PalaceGraph:
    """Images of the real line under the group generated by G1 and G2."""
    return _orbit_packing(IDENTITY, cfg)


def coset_packing(n: GaussMatrix2, cfg: ExplorationConfig) -> PalaceGraph:
    """Images of the real line under the coset n * <G1, G2>."""
    spinor(n)  # validates the determinant
    return _orbit_packing(n, cfg)


# -- the superpacking ------------------------------------------------------------

SUPER_GENERATORS = (
    GaussMatrix2.of(1, 1, 0, 1),
    GaussMatrix2.of(1, I, 0, 1),
    GaussMatrix2.of(0, -1, 1, 0),
    GaussMatrix2.of(I, 0, 0, 1),
)
_INVERSION = spinor(SUPER_GENERATORS[2])
_ROTATIONS = (spinor(SUPER_GENERATORS[3]), spinor(mat_inverse(SUPER_GENERATORS[3])))


def translate(v: PedoeVector, tx: int, ty: int) -> PedoeVector:
    """The circle moved by the Gaussian integer tx + i ty."""
    b, bp, r, m = v
    return PedoeVector(b, bp + 2 * (r * tx + m * ty) + b * (tx * tx + ty * ty), r + b * tx, m + b * ty)


def translation_class(v: PedoeVector) -> PedoeVector:
    """Representative modulo Gaussian-integer translations.

    Circles are moved so that their centre lies in [0, 1)^2; lines are moved
    through the origin.
    """
    b, bp, r, m = v
    if b == 0:
        return PedoeVector(0, 0, r, m)
    return translate(v, -(r // b), -(m // b))


def _translates_with_curvature(v: PedoeVector, limit: int) -> Iterable[PedoeVector]:
    """Translates of v whose co-curvature is at most ``limit`` in absolute value."""
    b, bp, r, m = v
    if b == 0:
        # only the offset along the normal changes; it moves in steps of 2
        for k in range(-(limit // 2), limit // 2 + 1):
            yield PedoeVector(0, 2 * k, r, m)
        return
    # |N(z + b t) - 1| <= limit |b|  confines t to a disk around -z/b
    reach = Fraction(limit * abs(b) + 1, b * b)
    cx, cy = Fraction(-r, b), Fraction(-m, b)
    span = int(reach ** 0.5) + 2
    for tx in range(int(cx) - span, int(cx) + span + 1):
        for ty in range(int(cy) - span, int(cy) + span + 1):
            w = translate(v, tx, ty)
            if abs(w.bp) <= limit:
                yield w


def superpacking_classes(limit: int) -> set[PedoeVector]:
    """All Gaussian circles with |b| <= limit, modulo translations.

    Closure of the real line under the generators: translations are absorbed
    into the class representative, so a class's neighbours are its rotations
    and the inversions of its translates.  Any circle can be translated to
    have centre within 1/sqrt(2) of the origin, after which inversion at least
    halves |b|; walking that descent backwards reaches every class while
    staying below the bound, so the pruned closure is complete.
    """
    start = translation_class(REAL_LINE)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        images = [rot @ v for rot in _ROTATIONS]
        images += [_INVERSION @ w for w in _translates_with_curvature(v, limit)]
        for w in images:
            c = translation_class(w)
            if abs(c.b) <= limit and c not in seen:
                seen.add(c)
                queue.append(c)
    return seen


def enumerate_superpacking(cfg: ExplorationConfig, margin: int = 4) -> list[Circle]:
    """Gaussian circles with 0 < b < max_curvature meeting the window, sorted.

    Translation classes are closed under the generators with curvature bound
    ``margin * max_curvature``; each class with a small enough positive
    curvature is then laid out over the translates meeting the window.
    """
    if cfg.max_curvature is None or cfg.window is None:
        raise ValueError("the superpacking needs a curvature bound and a window")
    if margin < 1:
        raise ValueError("margin must be at least 1")
    k, win = cfg.max_curvature, cfg.window
    classes = superpacking_classes(margin * k)
    log.debug("superpacking: %d translation classes", len(classes))
    found = []
    for c in classes:
        if not 0 < c.b < k:
            continue
        # the class centre lies in [0, 1)^2 and the radius is 1/b
        lo_x, hi_x = _floor(win.x0 - 2), _floor(win.x1 + 1)
        lo_y, hi_y = _floor(win.y0 - 2), _floor(win.y1 + 1)
        for tx in range(lo_x, hi_x + 1):
            for ty in range(lo_y, hi_y + 1):
                w = translate(c, tx, ty)
                if meets_window(w, win):
                    found.append(w)
    return [Circle.from_pedoe(v) for v in sorted(found)]


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


# -- primitivity -----------------------------------------------------------------


@dataclass
class PrimitivityReport:
    count: int
    all_even: bool
    half_gcd: int
    centres_integral: bool

    @property
    def ok(self) -> bool:
        return self.all_even and self.half_gcd == 1 and self.centres_integral


def half_primitive_check(circles: Iterable) -> PrimitivityReport:
    """Check that curvatures are even with coprime halves and that the
    curvature-centres are Gaussian integers.

    Accepts anything with ``b`` and ``z`` attributes, so that rescaled
    (non-Gaussian) circles can be checked too.
    """
    circles = list(circles)
    if not circles:
        raise ValueError("half_primitive_check needs at least one circle")
    all_even = all(Fraction(c.b).denominator == 1 and int(c.b) % 2 == 0 for c in circles)
    g = 0
    for c in circles:
        g = gcd(g, int(Fraction(c.b) / 2)) if all_even else g
    integral = all(
        Fraction(getattr(c.z, "re", c.z)).denominator == 1 and Fraction(getattr(c.z, "im", 0)).denominator == 1
        for c in circles
    )
    return PrimitivityReport(len(circles), all_even, g, integral)
