"""Acceptance gate: every comparison below is exact (tolerance 0).

Run with ``pytest tests/test_acceptance.py -v`` to get one pass/fail line per
criterion.  The long ruled-cubic interpolation is opt-in: set
``BOTT_ENUM_EXTENDED=1`` to run it; otherwise it reports as skipped.
"""

import json
import os
import random
import time
from collections import Counter
from fractions import Fraction
from math import comb
from pathlib import Path

import pytest

from bott_enum.charalg import dual, expand, tensor
from bott_enum.families import NET_TYPES, family_spec, fiber, net_tangent
from bott_enum.localize import (
    WeightVector,
    bott_sum,
    contribution,
    validate_weights,
    weight_of,
)
from bott_enum.polyfit import RatPoly, lagrange

from conftest import rep

EXTENDED = os.environ.get("BOTT_ENUM_EXTENDED") == "1"

ORACLE = {
    key: RatPoly([Fraction(c) for c in coeffs])
    for key, coeffs in json.loads(
        (Path(__file__).parent / "data" / "degree_polynomials.json").read_text()
    ).items()
}

ALL_SPECS = [
    family_spec("linear", k=1, n=3),
    family_spec("plane_curve", m=2),
    family_spec("plane_curve", m=3),
    family_spec("twisted_cubic"),
    family_spec("ruled_cubic"),
    family_spec("segre"),
    family_spec("elliptic_quartic"),
]


def label_counts(points):
    return dict(sorted(Counter(p.label for p in points).items()))


def interpolated(spec, degrees):
    points = spec.points()
    w = spec.default_weights
    return lagrange([(d, Fraction(bott_sum(points, d, w))) for d in degrees])


def test_criterion_1():
    start = time.perf_counter()
    spec = family_spec("linear", k=1, n=3)
    points = spec.points()
    w = WeightVector((4, 11, 17, 32))
    assert bott_sum(points, 3, w) == 504
    assert bott_sum(points, 2, w) == 10
    p = next(p for p in points if p.label == "<x0,x1>")
    assert contribution(p, 3, w) == Fraction(3217978137, 45864)
    assert time.perf_counter() - start < 1.0


def test_criterion_2():
    start = time.perf_counter()
    spec = family_spec("linear", k=1, n=3)
    assert interpolated(spec, range(3, 16)) == ORACLE["lines_p3"]
    assert time.perf_counter() - start < 10.0


def test_criterion_3():
    start = time.perf_counter()
    spec = family_spec("plane_curve", m=2)
    points = spec.points()
    w = WeightVector((11, 17, 32, 55))
    assert bott_sum(points, 4, w) == 151420
    p = next(p for p in points if p.label == "<x0,x1^2>")
    assert contribution(p, 4, w) == Fraction(
        26219809342420614792105, 381864067200
    )
    fit = interpolated(spec, range(4, 29))
    assert fit == ORACLE["conics"]
    assert fit.degree == spec.degree_bound_conjectural
    assert time.perf_counter() - start < 600.0


def test_criterion_4():
    start = time.perf_counter()
    spec = family_spec("plane_curve", m=3)
    fit = interpolated(spec, range(6, 43))
    assert fit == ORACLE["plane_cubics"]
    assert fit.degree == spec.degree_bound_conjectural
    assert time.perf_counter() - start < 3600.0


def test_criterion_5():
    start = time.perf_counter()
    spec = family_spec("twisted_cubic")
    points = spec.points()
    assert len(points) == 172
    assert label_counts(points) == {
        "type-1": 12,
        "type-2": 4,
        "type-3": 24,
        "type-4": 48,
        "type-5.1": 12,
        "type-5.2": 24,
        "type-5.3": 24,
        "type-5.4": 24,
    }
    oracle = ORACLE["twisted_cubic"]
    for d in range(4, 11):
        assert bott_sum(points, d, spec.default_weights) == oracle.eval(d)
    fit = interpolated(spec, range(4, 41))
    assert fit == oracle
    assert fit.degree == spec.degree_bound_conjectural
    assert fit.coefficients[-1] == Fraction(1095687, 50462720)
    assert time.perf_counter() - start < 3600.0


def test_criterion_6():
    start = time.perf_counter()
    spec = family_spec("elliptic_quartic")
    points = spec.points()
    assert len(points) == 813
    assert label_counts(points) == {
        "type-1": 6,
        "type-2": 12,
        "type-3": 3,
        "type-4": 36,
        "type-5": 108,
        "type-6": 324,
        "type-7": 324,
    }
    fit = interpolated(spec, range(6, 55))
    assert fit == ORACLE["elliptic_quartic"]
    assert fit.degree == spec.degree_bound_conjectural
    assert fit.coefficients[-1] == Fraction(77991978249, 47023181004800)
    assert time.perf_counter() - start < 14400.0


def test_criterion_7():
    spec = family_spec("ruled_cubic")
    points = spec.points()
    assert len(points) == 550
    assert label_counts(points) == {
        "type-1": 60,
        "type-2": 10,
        "type-3": 60,
        "type-4": 120,
        "type-5": 300,
    }
    oracle = ORACLE["ruled_cubic"]
    for d in range(4, 9):
        assert bott_sum(points, d, spec.default_weights) == oracle.eval(d)


@pytest.mark.skipif(
    not EXTENDED,
    reason="73-point ruled-cubic interpolation is opt-in: set BOTT_ENUM_EXTENDED=1",
)
def test_criterion_7_extended():
    spec = family_spec("ruled_cubic")
    assert interpolated(spec, range(4, 77)) == ORACLE["ruled_cubic"]


def test_criterion_8():
    spec = family_spec("segre")
    points = spec.points()
    assert len(points) == 1340
    assert label_counts(points) == {
        "type-1": 180,
        "type-2": 20,
        "type-3": 120,
        "type-4": 240,
        "type-5": 780,
    }
    w = spec.default_weights
    assert bott_sum(points, 4, w) == 4985292672535
    assert bott_sum(points, 5, w) == 38085453623924002125608


def test_criterion_9():
    rng = random.Random(20260814)
    for spec in ALL_SPECS:
        points = spec.points()
        d = spec.d_min + 1

        # (c) tangent shape under the default weights
        for p in points:
            flat = expand(p.tangent)
            assert len(flat) == spec.dim_w
            assert not any(c.is_trivial() for c in flat)
            assert all(weight_of(c, spec.default_weights) != 0 for c in flat)

        # (b) fiber rank against the family Hilbert polynomial
        want = comb(d + spec.n, spec.n) - spec.hilb.eval(d)
        assert all(len(fiber(p, d)) == want for p in points)

        # (d) the localized sum collapses to a nonnegative integer
        reference = bott_sum(points, d, spec.default_weights)
        assert isinstance(reference, int) and reference >= 0

        # (a) the same integer under three valid random weight vectors
        found = 0
        for _ in range(200):
            trial = WeightVector(rng.sample(range(1, 500), spec.n + 1))
            if not validate_weights(points, trial).ok:
                continue
            assert bott_sum(points, d, trial) == reference
            found += 1
            if found == 3:
                break
        assert found == 3

    # (e) the shared net tangent formula matches the worked P^4 displays
    displays = {
        1: (
            "x0*x1*x2*x3",
            "x0^3*x1 + x0^2*x1*x2 + x0*x1*x2^2 + x0^2*x1*x3 + x0*x1^2*x3"
            " + x0^2*x2*x3 + x1^2*x2*x3 + x0*x2^2*x3 + x0*x1*x3^2 + x0*x2*x3^2"
            " + x1*x2*x3^2 + x2*x3^3 + x0^2*x1*x4 + x0*x1*x2*x4 + x0*x1*x3*x4"
            " + x0*x2*x3*x4 + x1*x2*x3*x4 + x2*x3^2*x4",
        ),
        2: (
            "x0*x1*x2",
            "x0^2*x1 + x0*x1^2 + x0^2*x2 + x1^2*x2 + x0*x2^2 + x1*x2^2"
            " + 2*x0*x1*x3 + 2*x0*x2*x3 + 2*x1*x2*x3 + 2*x0*x1*x4"
            " + 2*x0*x2*x4 + 2*x1*x2*x4",
        ),
        3: (
            "x0*x1*x2^2",
            "x0*x1^3 + x0^2*x1*x2 + x0*x1^2*x2 + x0^2*x2^2 + x1^2*x2^2"
            " + x1*x2^3 + x0*x1^2*x3 + 2*x0*x1*x2*x3 + x0*x2^2*x3 + x1*x2^2*x3"
            " + x2^3*x3 + x0*x1^2*x4 + 2*x0*x1*x2*x4 + x0*x2^2*x4 + x1*x2^2*x4"
            " + x2^3*x4",
        ),
        4: (
            "x0^2*x1^2",
            "x0^3*x2 + 2*x0^2*x1*x2 + 2*x0*x1^2*x2 + x1^3*x2 + x0^3*x3"
            " + 2*x0^2*x1*x3 + 2*x0*x1^2*x3 + x1^3*x3 + x0^3*x4"
            " + 2*x0^2*x1*x4 + 2*x0*x1^2*x4 + x1^3*x4",
        ),
        5: (
            "x0*x1*x2",
            "x1^3 + 2*x1^2*x2 + 2*x1*x2^2 + x2^3 + x0*x1*x3 + x1^2*x3"
            " + x0*x2*x3 + 2*x1*x2*x3 + x2^2*x3 + x0*x1*x4 + x1^2*x4"
            " + x0*x2*x4 + 2*x1*x2*x4 + x2^2*x4",
        ),
    }
    for type_id, (prefactor, terms) in displays.items():
        t = NET_TYPES[type_id - 1]
        assert net_tangent(t.generators(4), t.syzygies(4), 4) == tensor(
            dual(rep(prefactor, 4)), rep(terms, 4)
        )
