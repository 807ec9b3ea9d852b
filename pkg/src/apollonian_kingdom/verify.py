"""Invariant suites over random samples and generated packings.

Each suite returns a :class:`SuiteResult` counting checks that passed and
failed and keeping the first few failures for diagnosis.  The CLI ``verify``
command and the acceptance tests both drive these.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .circles import (
    CENTRE_IM_FORM,
    CENTRE_RE_FORM,
    COCURVATURE_FORM,
    CURVATURE_FORM,
    Circle,
    HermitianForm,
    circle_from_lattice,
    circle_from_matrix,
    hermitian_descartes_check,
    descartes_quantity,
    tangency_lax,
    tangency_point,
)
from .explorer import (
    ExplorationConfig,
    PalaceGraph,
    Window,
    base_chamber,
    coset_packing,
    enumerate_superpacking,
    explore_palace,
    half_primitive_check,
    lockstep_verify,
    strip_packing,
    strip_relation_holds,
)
from .gaussian import I, UNITS, CosetClass, GaussInt, GaussMatrix2, coset_class, gauss_xgcd
from .lax import LaxLattice, Superbasis, Vec2, is_superbasis, lattice_equal, lax_canonical
from .minkowski import (
    BASE_QUADRUPLE,
    LorentzMatrix,
    PedoeVector,
    apply_to_quadruple,
    descartes_complement,
    descartes_scalar_check,
    int_det,
    is_descartes,
    mink_inner,
    ordering_sign,
    positively_ordered,
    quadruple_matrix,
    relate_quadruples,
    spinor,
    swap,
)

BOUNDED_COSET = GaussMatrix2.of(I, 0, 1, I)

# Vertex matrices of the left standard chamber on u = (1, 0), v = (0, -i),
# in the order they are usually listed (the last two swap relative to the
# base quadruple's columns).
BASE_CHAMBER_MATRICES = (
    GaussMatrix2.of(1, 0, 0, 1),
    GaussMatrix2.of(-1, I, I, 0),
    GaussMatrix2.of(0, -I, -I, -1),
    GaussMatrix2.of(-1, I, I - 1, I),
)

# The quarter-turn image as displayed in the literature; with the Hermitian
# layout used here it is the transpose of spinor(diag(i, 1)).
QUARTER_TURN_DISPLAYED = LorentzMatrix(((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1), (0, 0, -1, 0)))


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    def check(self, ok: bool, what: Callable[[], str] | str = "") -> bool:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 10:
                self.failures.append(what() if callable(what) else what)
        return ok

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.name}: {status} ({self.passed} passed, {self.failed} failed)"


# -- random samples --------------------------------------------------------------


def random_gauss(rng: random.Random, bound: int) -> GaussInt:
    return GaussInt(rng.randint(-bound, bound), rng.randint(-bound, bound))


def random_unit_det_matrix(rng: random.Random, bound: int = 20) -> GaussMatrix2:
    """A random matrix with unit determinant and entries of modulus <= bound
    in each coordinate.

    A random first column with coprime entries is completed by the extended
    Euclidean algorithm, shifted by a random multiple of the first column and
    then scaled by a random unit.
    """
    while True:
        a, c = random_gauss(rng, bound), random_gauss(rng, bound)
        if not (a or c):
            continue
        g, s, t = gauss_xgcd(a, c)
        if g.norm() != 1:
            continue
        # s a + t c = 1, so (a -t; c s) has determinant 1
        b, d = -t, s
        k = random_gauss(rng, 2)
        b, d = b + k * a, d + k * c
        b, d = b * rng.choice(UNITS), d * rng.choice(UNITS)
        m = GaussMatrix2(a, b, c, d)
        if m.det().norm() == 1 and all(abs(x.re) <= bound and abs(x.im) <= bound for x in (a, b, c, d)):
            return m


def random_superbasis(rng: random.Random, bound: int = 20) -> Superbasis:
    """A zero-sum superbasis (u, v, -u-v) with all entries bounded."""
    m = random_unit_det_matrix(rng, bound // 2)
    u, v = Vec2(m.a, m.c), Vec2(m.b, m.d)
    return Superbasis(u, v, -(u + v))


def random_hermitian(rng: random.Random, bound: int = 9) -> HermitianForm:
    return HermitianForm(rng.randint(-bound, bound), rng.randint(-bound, bound), random_gauss(rng, bound))


# -- suites ----------------------------------------------------------------------


def base_correspondence_suite() -> SuiteResult:
    res = SuiteResult("base")
    got = [circle_from_matrix(m).key for m in BASE_CHAMBER_MATRICES]
    expected = [BASE_QUADRUPLE[i] for i in (0, 1, 3, 2)]
    res.check(got == expected, lambda: f"base chamber matrices give {got}")
    lattices = [LaxLattice.from_matrix(m) for m in BASE_CHAMBER_MATRICES]
    chamber = base_chamber()
    res.check(
        sorted(circle_from_lattice(lat).key for lat in chamber.vertices) == sorted(BASE_QUADRUPLE),
        "the standard chamber's vertices are not the base quadruple",
    )
    res.check(
        all(any(lattice_equal(a, b) for b in chamber.vertices) for a in lattices),
        "the standard chamber's lattices differ from the base chamber matrices",
    )
    res.check(ordering_sign(BASE_QUADRUPLE) == 1, "base quadruple is not positively ordered")
    return res


def hermitian_suite(samples: int = 1000, forms: int = 20, seed: int = 1) -> SuiteResult:
    """The Hermitian Descartes identity and the reality of the Descartes quantity."""
    rng = random.Random(seed)
    res = SuiteResult("hermitian")
    fixed = [CURVATURE_FORM, COCURVATURE_FORM, CENTRE_RE_FORM, CENTRE_IM_FORM]
    for _ in range(samples):
        s = random_superbasis(rng)
        for h in fixed + [random_hermitian(rng) for _ in range(forms)]:
            res.check(hermitian_descartes_check(h, s), lambda: f"identity fails for {h} on {s}")
            res.check(descartes_quantity(h, s).im == 0, lambda: f"Descartes quantity not real for {h} on {s}")
    return res


def parity_suite(samples: int = 1000, seed: int = 1) -> SuiteResult:
    """Curvatures even, centres of mixed parity matching the coset, b'b = N(z) - 1."""
    rng = random.Random(seed)
    res = SuiteResult("parity")
    for _ in range(samples):
        m = random_unit_det_matrix(rng)
        b = 2 * (m.c * m.d.conj()).im
        bp = 2 * (m.a * m.b.conj()).im
        z = I * (m.b * m.c.conj() - m.a * m.d.conj())
        psl_shape = z.re % 2 == 0 and z.im % 2 == 1
        res.check(b % 2 == 0 and bp % 2 == 0, lambda: f"{m}: odd curvature")
        res.check((z.re + z.im) % 2 == 1, lambda: f"{m}: centre {z} not of mixed parity")
        res.check(psl_shape == (coset_class(m) is CosetClass.PSL), lambda: f"{m}: parity vs coset")
        res.check(b * bp == z.norm() - 1, lambda: f"{m}: b'b != N(z) - 1")
        res.check(circle_from_matrix(m) == Circle(b, bp, z), lambda: f"{m}: circle_from_matrix")
    return res


def spinor_suite(samples: int = 1000, seed: int = 1) -> SuiteResult:
    """Homomorphism, Lorentz invariants and agreement with the circle action."""
    rng = random.Random(seed)
    res = SuiteResult("spinor")
    for _ in range(samples):
        m1, m2 = random_unit_det_matrix(rng), random_unit_det_matrix(rng)
        n1, n2 = spinor(m1), spinor(m2)
        res.check(spinor(m1 @ m2) == n1 @ n2, lambda: f"not a homomorphism at {m1}, {m2}")
        res.check(n1.is_proper_orthochronous(), lambda: f"spinor({m1}) not in SO+")
        res.check(spinor(m1.scale(I)) == n1, lambda: f"spinor({m1}) depends on unit scaling")
    for _ in range(samples):
        m, c = random_unit_det_matrix(rng), random_unit_det_matrix(rng)
        image = circle_from_matrix(m @ c).key
        res.check(spinor(m) @ circle_from_matrix(c).key == image, lambda: f"agreement fails at {m}, {c}")
    quarter = spinor(GaussMatrix2.of(I, 0, 0, 1))
    res.check(quarter.transpose() == QUARTER_TURN_DISPLAYED, "quarter turn differs from the displayed matrix")
    res.check(spinor(GaussMatrix2.of(-I, 0, 0, 1)) == QUARTER_TURN_DISPLAYED, "inverse quarter turn")
    return res


def packing_graph(source: str, max_curvature: int, window: Window | None = None) -> PalaceGraph:
    """The strip packing or the reference coset packing, by swaps."""
    if source == "strip":
        seed = BASE_QUADRUPLE
        window = window or Window.of(-3, -1, 3, 2)
    elif source == "coset":
        seed = apply_to_quadruple(spinor(BOUNDED_COSET), BASE_QUADRUPLE)
    else:
        raise ValueError(f"unknown packing source {source!r}; use strip or coset")
    return explore_palace(seed, ExplorationConfig(max_curvature=max_curvature, window=window))


def descartes_suite(source: str = "strip", max_curvature: int = 100) -> SuiteResult:
    """Gram matrix, both Descartes relations, determinant, tangency congruences
    and orientation counts over every chamber of a generated packing."""
    res = SuiteResult(f"descartes[{source}]")
    g = packing_graph(source, max_curvature)
    for key in g.chambers:
        res.check(is_descartes(key), lambda: f"{key}: Gram matrix is not R")
        res.check(descartes_scalar_check(*(v.b for v in key)), lambda: f"{key}: quadratic relation")
        res.check(abs(int_det(quadruple_matrix(key))) == 8, lambda: f"{key}: |det| != 8")
        res.check(sum(v.b < 0 for v in key) <= 1, lambda: f"{key}: two negatively oriented circles")
        for i in range(4):
            new = swap(key, i)
            rest = [v.b for j, v in enumerate(key) if j != i]
            res.check(new[i].b == descartes_complement(*rest, key[i].b), lambda: f"{key}: linear relation at {i}")
            res.check(is_descartes(new), lambda: f"{key}: swap {i} not Descartes")
    for pair in g.edges:
        v1, v2 = tuple(pair)
        res.check(mink_inner(v1, v2) == -1, lambda: f"{pair}: edge circles not tangent")
        res.check(tangent_congruence(v1, v2), lambda: f"{pair}: centres not congruent mod 1+i")
    return res


def tangent_congruence(v1: PedoeVector, v2: PedoeVector) -> bool:
    """z1 == z2 and neither is 0 modulo 1+i (reduction mod 1+i is re+im mod 2)."""
    p1, p2 = (v1.r + v1.m) % 2, (v2.r + v2.m) % 2
    return p1 == p2 == 1


def relate_suite(pairs: int = 200, seed: int = 1) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("relate")
    pool = sorted(packing_graph("strip", 40).chambers) + sorted(packing_graph("coset", 40).chambers)
    for _ in range(pairs):
        a = positively_ordered(rng.choice(pool))
        b = positively_ordered(rng.choice(pool))
        try:
            n = relate_quadruples(a, b)
        except ValueError as exc:
            res.check(False, f"{a} vs {b}: {exc}")
            continue
        res.check(
            n.det() == 1 and n.preserves_form() and n.is_orthochronous() and apply_to_quadruple(n, b) == a,
            lambda: f"{a} vs {b}: bad relating matrix",
        )
    return res


def lockstep_suite(depth: int = 6) -> SuiteResult:
    res = SuiteResult(f"lockstep[{depth}]")
    report = lockstep_verify(depth)
    res.check(report.ok, lambda: "; ".join(report.mismatches[:3]))
    res.passed += report.chambers
    expected = 1 + 2 * (3**depth - 1)
    res.check(report.chambers == expected, lambda: f"{report.chambers} chambers, expected {expected}")
    return res


def duality_suite(max_curvature: int = 20) -> SuiteResult:
    res = SuiteResult("duality")
    res.check(strip_relation_holds(), "strip group relation fails")
    win = Window.of(-3, -1, 3, 2)
    cfg = ExplorationConfig(max_curvature=max_curvature, window=win)
    by_swaps = explore_palace(BASE_QUADRUPLE, cfg).circles_within(max_curvature, win)
    by_orbit = strip_packing(cfg).circles_within(max_curvature, win)
    res.check(by_swaps == by_orbit, lambda: f"strip: {len(by_swaps)} by swaps vs {len(by_orbit)} by orbit")
    seed = apply_to_quadruple(spinor(BOUNDED_COSET), BASE_QUADRUPLE)
    cfg = ExplorationConfig(max_curvature=max_curvature)
    by_swaps = explore_palace(seed, cfg).circles_within(max_curvature)
    by_orbit = coset_packing(BOUNDED_COSET, cfg).circles_within(max_curvature)
    res.check(by_swaps == by_orbit, lambda: f"coset: {len(by_swaps)} by swaps vs {len(by_orbit)} by orbit")
    return res


def primitivity_suite(source: str = "strip", max_curvature: int = 40) -> SuiteResult:
    res = SuiteResult(f"primitivity[{source}]")
    circles = packing_graph(source, max_curvature).circles_within(max_curvature)
    report = half_primitive_check(circles)
    res.check(report.all_even, "odd curvature found")
    res.check(report.half_gcd == 1, lambda: f"half-curvature gcd is {report.half_gcd}")
    res.check(report.centres_integral, "non-integral curvature-centre")
    return res


def square_symmetries(v: PedoeVector) -> list[PedoeVector]:
    """Images of a circle under the eight symmetries of the unit square."""
    b, bp, r, m = v

    def make(r2: int, m2: int) -> PedoeVector:
        return PedoeVector(b, (r2 * r2 + m2 * m2 - 1) // b, r2, m2)

    out = []
    for _ in range(4):
        out.append(make(r, m))
        out.append(make(b - r, m))  # x -> 1 - conj(x)
        r, m = b - m, r  # x -> i x + 1
    return out


def superpacking_suite(max_curvature: int = 40, margin: int = 4) -> SuiteResult:
    res = SuiteResult("superpacking")
    win = Window.of(0, 0, 1, 1)
    cfg = ExplorationConfig(max_curvature=max_curvature, window=win)
    base = [c.key for c in enumerate_superpacking(cfg, margin)]
    doubled = [c.key for c in enumerate_superpacking(cfg, 2 * margin)]
    res.check(base == doubled, lambda: f"{len(base)} circles vs {len(doubled)} with doubled margin")
    found = set(base)
    for v in base:
        for w in square_symmetries(v):
            res.check(w in found, lambda: f"{w} (image of {v}) missing")
    for v in packing_graph("strip", max_curvature - 1, win).circles_within(max_curvature - 1, win):
        if v.b > 0:
            res.check(v.key in found, lambda: f"strip circle {v} missing")
    for v in base:
        res.check(Circle.from_pedoe(v).key == v, "invalid circle")
    return res


QUOTED_TANGENCIES = [
    ((Fraction(5, 13), Fraction(12, 13)), (GaussInt(3, 2), GaussInt(3, -2))),
    ((Fraction(3, 8), Fraction(7, 8)), (GaussInt(5, 2), GaussInt(4, -4))),
    ((Fraction(13, 37), Fraction(33, 37)), (GaussInt(3, 5), GaussInt(6, -1))),
]


def tangency_suite() -> SuiteResult:
    """The tangency points among strip circles reproduce the quoted lax vectors."""
    res = SuiteResult("tangency")
    g = packing_graph("strip", 60, Window.of(0, 0, 1, 1))
    points = {}
    for pair, label in g.edges.items():
        c1, c2 = (Circle.from_pedoe(v) for v in pair)
        points[tangency_point(c1, c2).value()] = label
        res.check(label == tangency_lax(c1, c2), "edge label is not the tangency lax vector")
    labels = []
    for point, vec in QUOTED_TANGENCIES:
        want = lax_canonical(Vec2(*vec))
        labels.append(want)
        res.check(points.get(point) == want, lambda: f"point {point}: got {points.get(point)}, want {want}")
    res.check(is_superbasis(*labels), "the three lax vectors are not a superbasis")
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "base": base_correspondence_suite,
    "hermitian": hermitian_suite,
    "parity": parity_suite,
    "spinor": spinor_suite,
    "descartes": descartes_suite,
    "relate": relate_suite,
    "lockstep": lockstep_suite,
    "duality": duality_suite,
    "primitivity": primitivity_suite,
    "superpacking": superpacking_suite,
    "tangency": tangency_suite,
}
