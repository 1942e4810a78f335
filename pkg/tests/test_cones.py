import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gitfan.cones import (
    ConeError,
    chambers,
    cone_from_hrep,
    cone_from_rays,
    contains,
    equal,
    face_of,
    faces,
    intersect,
    is_face,
    relint_contains,
    relint_point,
    zero_cone,
)
from gitfan.genrep import effective_cone
from gitfan.io import emit_cone, parse_cone
from oracles import brute_force_rays

QUADRANT = cone_from_hrep(2, [], [(-1, 0), (0, -1)])
RAY = cone_from_hrep(2, [(1, 1)], [(0, 1)])


def test_hrep_examples():
    assert QUADRANT.rays == ((0, 1), (1, 0))
    assert QUADRANT.dim == 2 and QUADRANT.lineality == ()
    assert RAY.rays == ((1, -1),)
    plane = cone_from_hrep(2, [], [])
    assert plane.rays == () and len(plane.lineality) == 2 and plane.dim == 2


def test_membership_examples():
    assert contains(QUADRANT, (1, 1)) and relint_contains(QUADRANT, (1, 1))
    assert contains(QUADRANT, (1, 0)) and not relint_contains(QUADRANT, (1, 0))
    assert relint_contains(RAY, (2, -2))
    assert relint_contains(RAY, (Fraction(1, 3), Fraction(-1, 3)))
    assert not contains(RAY, (1, 0))


def test_intersection_examples():
    below = cone_from_hrep(2, [], [(-1, 1)])
    C = intersect(QUADRANT, below)
    assert set(C.rays) == {(1, 0), (1, 1)}
    ray10 = cone_from_rays(2, [(1, 0)])
    assert intersect(RAY, ray10).is_zero


def test_equality_examples():
    reordered = cone_from_hrep(2, [], [(0, -1), (-1, 0)])
    assert equal(QUADRANT, reordered) and QUADRANT == reordered
    assert cone_from_rays(2, [(3, -3)]) == RAY
    half = cone_from_hrep(2, [], [(0, -1)])
    assert not equal(QUADRANT, half)


def test_face_examples():
    fs = faces(QUADRANT)
    assert len(fs) == 4
    assert {f.dim for f in fs} == {0, 1, 2}
    assert face_of(QUADRANT, (1, 0)) == cone_from_rays(2, [(1, 0)])
    for C in (QUADRANT, RAY):
        assert face_of(C, relint_point(C)) == C
    assert is_face(zero_cone(2), QUADRANT)
    assert not is_face(cone_from_rays(2, [(1, 1)]), QUADRANT)


def test_relint_point_examples():
    assert relint_point(QUADRANT) == (1, 1)
    assert relint_point(RAY) == (1, -1)
    assert relint_point(zero_cone(3)) == (0, 0, 0)


def test_chamber_examples(square):
    assert len(chambers(QUADRANT, [(1, -1)])) == 2
    assert chambers(QUADRANT, []) == [QUADRANT]
    C = effective_cone(square, (1, 1, 1, 1))
    parts = chambers(C, [(1, 0, 0, 1), (0, 1, 0, 1)])
    assert len(parts) == 4 and all(P.dim == 3 for P in parts)


def test_chambers_cover_support(square):
    C = effective_cone(square, (1, 1, 1, 1))
    hyper = [(1, 0, 0, 1), (0, 1, 0, 1), (1, 1, 0, 0)]
    parts = chambers(C, hyper)
    rng = random.Random(7)
    for _ in range(1000):
        coeffs = [rng.randint(0, 20) for _ in C.rays]
        pt = tuple(sum(c * r[i] for c, r in zip(coeffs, C.rays)) for i in range(4))
        assert any(contains(P, pt) for P in parts)
    for P, R in itertools.combinations(parts, 2):
        assert intersect(P, R).dim < P.dim


def test_mismatched_dimension_rejected():
    with pytest.raises(ConeError):
        cone_from_hrep(2, [], [(1, 0, 0)])


rows = st.lists(st.integers(-2, 2), min_size=3, max_size=3)


@settings(max_examples=80, deadline=None)
@given(st.lists(rows, min_size=3, max_size=6))
def test_rays_match_brute_force(ineqs):
    # add the nonnegative orthant to keep the cone pointed
    ineqs = ineqs + [[-1, 0, 0], [0, -1, 0], [0, 0, -1]]
    C = cone_from_hrep(3, [], ineqs)
    assert set(C.rays) == brute_force_rays(3, [], ineqs)


@settings(max_examples=60, deadline=None)
@given(st.lists(rows, min_size=1, max_size=5))
def test_vrep_hrep_round_trip(gens):
    C = cone_from_rays(3, gens)
    D = cone_from_hrep(3, C.equations, C.inequalities)
    assert C == D
    assert parse_cone(emit_cone(C)) == C
    for g in gens:
        assert contains(C, g)


@settings(max_examples=60, deadline=None)
@given(st.lists(rows, min_size=1, max_size=5))
def test_faces_closed_under_faces(gens):
    C = cone_from_rays(3, gens)
    fs = faces(C)
    assert len(set(fs)) == len(fs)
    for F in fs:
        assert is_face(F, C)
        for G in faces(F):
            assert G in fs
        assert face_of(C, relint_point(F)) == F


def test_emit_examples():
    doc = emit_cone(zero_cone(2))
    assert doc["dim"] == 0 and doc["rays"] == []
    assert emit_cone(RAY)["rays"] == [[1, -1]]
