"""Acceptance criteria, one test per criterion.

Every check is exact (integer or rational equality): the tolerance is zero
throughout.  Each test prints one PASS/FAIL line, also when run through
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import sys

import pytest

from apollonian_kingdom.explorer import ExplorationConfig, explore_palace
from apollonian_kingdom.minkowski import BASE_QUADRUPLE
from apollonian_kingdom.verify import (
    SuiteResult,
    base_correspondence_suite,
    descartes_suite,
    duality_suite,
    hermitian_suite,
    lockstep_suite,
    packing_graph,
    parity_suite,
    primitivity_suite,
    relate_suite,
    spinor_suite,
    superpacking_suite,
    tangency_suite,
    tangent_congruence,
)

TOLERANCE = 0  # all comparisons are exact

# pinned sample sizes and bounds
HERMITIAN_SUPERBASES, HERMITIAN_FORMS = 1000, 20
PARITY_MATRICES = 1000
SPINOR_PAIRS = 1000
RELATE_PAIRS = 200
LOCKSTEP_DEPTH = 6
DESCARTES_BOUND = 100
DUALITY_BOUND = 20
PRIMITIVITY_BOUND = 40
SUPERPACKING_BOUND, SUPERPACKING_MARGIN = 40, 4
SEED = 1


def merge(name: str, *results: SuiteResult) -> SuiteResult:
    out = SuiteResult(name)
    for r in results:
        out.passed += r.passed
        out.failed += r.failed
        out.failures += [f"{r.name}: {f}" for f in r.failures]
    return out


def tangent_centre_suite() -> SuiteResult:
    res = SuiteResult("tangent centres mod 1+i")
    graphs = [
        packing_graph("strip", DESCARTES_BOUND),
        packing_graph("coset", DESCARTES_BOUND),
        explore_palace(BASE_QUADRUPLE, ExplorationConfig(max_depth=LOCKSTEP_DEPTH)),
    ]
    for g in graphs:
        for pair in g.edges:
            res.check(tangent_congruence(*tuple(pair)), lambda: f"{sorted(pair)}")
    return res


CRITERIA = {
    1: ("base chamber maps to the base quadruple", base_correspondence_suite),
    2: (f"lockstep bijection to depth {LOCKSTEP_DEPTH}", lambda: lockstep_suite(LOCKSTEP_DEPTH)),
    3: (
        f"Descartes identities on strip and coset chambers, bound {DESCARTES_BOUND}",
        lambda: merge(
            "descartes",
            descartes_suite("strip", DESCARTES_BOUND),
            descartes_suite("coset", DESCARTES_BOUND),
        ),
    ),
    4: (
        f"Hermitian identity, {HERMITIAN_SUPERBASES} superbases x {HERMITIAN_FORMS} forms",
        lambda: hermitian_suite(HERMITIAN_SUPERBASES, HERMITIAN_FORMS, SEED),
    ),
    5: (f"curvature parity on {PARITY_MATRICES} matrices", lambda: parity_suite(PARITY_MATRICES, SEED)),
    6: (f"spinor map on {SPINOR_PAIRS} pairs", lambda: spinor_suite(SPINOR_PAIRS, SEED)),
    7: (f"relating Lorentz matrices for {RELATE_PAIRS} pairs", lambda: relate_suite(RELATE_PAIRS, SEED)),
    8: ("tangent centres agree and are nonzero mod 1+i", tangent_centre_suite),
    9: (f"orbit/swap duality at bound {DUALITY_BOUND} and the group relation", lambda: duality_suite(DUALITY_BOUND)),
    10: (
        f"half-primitivity of strip and coset at bound {PRIMITIVITY_BOUND}",
        lambda: merge(
            "primitivity",
            primitivity_suite("strip", PRIMITIVITY_BOUND),
            primitivity_suite("coset", PRIMITIVITY_BOUND),
        ),
    ),
    11: (
        f"superpacking stability at bound {SUPERPACKING_BOUND}",
        lambda: superpacking_suite(SUPERPACKING_BOUND, SUPERPACKING_MARGIN),
    ),
    12: ("quoted tangency points give the quoted superbasis", tangency_suite),
}


def report(number: int, title: str, result: SuiteResult) -> str:
    status = "PASS" if result.ok else "FAIL"
    line = (
        f"[acceptance {number:2d}] {status}  {title}: "
        f"{result.passed} checks passed, {result.failed} failed (tolerance {TOLERANCE})"
    )
    for failure in result.failures[:3]:
        line += f"\n      {failure}"
    return line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_acceptance(number, capsys):
    title, suite = CRITERIA[number]
    result = suite()
    with capsys.disabled():
        print("\n" + report(number, title, result))
    assert result.ok, result.failures


if __name__ == "__main__":
    failed = 0
    for n in sorted(CRITERIA):
        title, suite = CRITERIA[n]
        res = suite()
        print(report(n, title, res))
        failed += not res.ok
    sys.exit(1 if failed else 0)
