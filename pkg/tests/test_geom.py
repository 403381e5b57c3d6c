import itertools
import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from penny.errors import DomainError
from penny.exactnum import SQRT2, SQRT3, QuadNum
from penny.geom import (
    Point,
    PointSet,
    Quadrilateral,
    convex_hull,
    cross,
    coord_sign,
    interior_angle,
    lemma_geom_check,
    polygon_signed_area,
    segments_cross,
    squared_distance,
)

F = Fraction
Q = QuadNum


def npt(x, y, i=0):
    return Point(float(x), float(y), i)


class TestSquaredDistance:
    def test_unit(self):
        assert squared_distance(npt(0, 0), npt(1, 0)) == 1.0

    def test_exact_diagonal_half_sqrt2(self):
        p = Point(Q(0), Q(0), 0)
        q = Point(SQRT2 * F(1, 2), SQRT2 * F(1, 2), 1)
        assert squared_distance(p, q) == 1

    def test_rhombus_side(self):
        p = Point(Q(F(1, 2)), Q(0), 0)
        q = Point(Q(0), SQRT3 * F(1, 2), 1)
        assert squared_distance(p, q) == 1  # 1/4 + 3/4

    def test_mode_mismatch(self):
        with pytest.raises(DomainError, match="mode mismatch"):
            squared_distance(npt(0, 0), Point(Q(1), Q(0), 1))


def brute_force_extreme_points(points):
    """Independent oracle: p is extreme iff it is a vertex of every
    direction sweep, i.e. strictly outside the hull of the others.

    Uses the LP-free test: p is NOT extreme iff some triangle (or segment)
    of other points contains it.
    """
    pts = [(float(p.x), float(p.y)) for p in points]
    extreme = []
    for i, p in enumerate(pts):
        others = [q for j, q in enumerate(pts) if j != i]
        contained = False
        for a, b, c in itertools.combinations(others, 3):
            if _in_triangle(p, a, b, c):
                contained = True
                break
        if not contained:
            for a, b in itertools.combinations(others, 2):
                if _on_closed_segment(p, a, b):
                    contained = True
                    break
        if not contained:
            extreme.append(points[i])
    return extreme


def _orient(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def _in_triangle(p, a, b, c):
    if _orient(a, b, c) == 0:
        return False  # degenerate triangle; collinear containment is the segment case
    d1, d2, d3 = _orient(a, b, p), _orient(b, c, p), _orient(c, a, p)
    return (d1 >= 0 and d2 >= 0 and d3 >= 0) or (d1 <= 0 and d2 <= 0 and d3 <= 0)


def _on_closed_segment(p, a, b):
    if abs(_orient(a, b, p)) > 1e-12:
        return False
    return (
        min(a[0], b[0]) - 1e-12 <= p[0] <= max(a[0], b[0]) + 1e-12
        and min(a[1], b[1]) - 1e-12 <= p[1] <= max(a[1], b[1]) + 1e-12
    )


class TestConvexHull:
    def test_unit_square(self):
        pts = [npt(0, 0, 0), npt(1, 0, 1), npt(1, 1, 2), npt(0, 1, 3)]
        hull = convex_hull(pts)
        assert len(hull) == 4
        assert polygon_signed_area(hull) > 0  # counterclockwise

    def test_square_with_center(self):
        pts = [npt(0, 0, 0), npt(1, 0, 1), npt(1, 1, 2), npt(0, 1, 3), npt(0.5, 0.5, 4)]
        hull = convex_hull(pts)
        assert {p.id for p in hull} == {0, 1, 2, 3}

    def test_sixteen_point_extreme_count(self, fixture_16):
        # brute-force oracle: the boundary 12-gon is convex, so 12 points
        # are extreme (4 fixture vertices lie strictly inside)
        oracle = brute_force_extreme_points(list(fixture_16.points))
        hull = convex_hull(fixture_16.points)
        assert len(hull) == len(oracle) == 12
        assert {p.id for p in hull} == {p.id for p in oracle}

    def test_collinear_returns_endpoints(self):
        pts = [npt(0, 0, 0), npt(1, 0, 1), npt(2, 0, 2), npt(3, 0, 3)]
        hull = convex_hull(pts)
        assert {p.id for p in hull} == {0, 3}

    def test_single_point(self):
        p = npt(1, 2, 0)
        assert convex_hull([p]) == [p]

    @given(
        st.lists(
            st.tuples(
                st.integers(min_value=-50, max_value=50),
                st.integers(min_value=-50, max_value=50),
            ),
            min_size=1,
            max_size=40,
            unique=True,
        )
    )
    @settings(max_examples=150)
    def test_hull_is_convex_and_permutation_invariant(self, coords):
        pts = [npt(x, y, i) for i, (x, y) in enumerate(coords)]
        hull = convex_hull(pts)
        m = len(hull)
        if m >= 3:
            for i in range(m):
                a, b, c = hull[i], hull[(i + 1) % m], hull[(i + 2) % m]
                assert coord_sign(cross(a, b, c)) > 0  # strict left turns only
        rng = random.Random(hash(tuple(coords)) & 0xFFFF)
        shuffled = pts[:]
        rng.shuffle(shuffled)
        hull2 = convex_hull(shuffled)
        assert [p.id for p in hull] == [p.id for p in hull2]


class TestInteriorAngle:
    def test_equilateral_triangle(self):
        a, b, c = npt(0, 0), npt(1, 0), npt(0.5, math.sqrt(3) / 2)
        # CCW triangle a, b, c; angle at b between sides ba and bc
        assert interior_angle(a, b, c) == pytest.approx(60.0, abs=1e-9)

    def test_square(self):
        a, b, c = npt(0, 0), npt(1, 0), npt(1, 1)
        assert interior_angle(a, b, c) == pytest.approx(90.0, abs=1e-9)

    def test_reflex_vertex(self):
        # L-shaped hexagon, CCW, reflex corner at (1, 1)
        prev, at, nxt = npt(2, 1), npt(1, 1), npt(1, 2)
        assert interior_angle(prev, at, nxt) == pytest.approx(270.0, abs=1e-9)

    def test_lemma3_pentagon_reflex_angle_at_inner_vertex(self):
        # rhombus A3-A4-A5-B made of two unit triangles; the pentagon
        # A2-A3-B-A5-A6 sees the reflex side of B: 360 - 2*60 = 240
        b = npt(0, 0)
        a3 = npt(0.5, math.sqrt(3) / 2)
        a5 = npt(0.5, -math.sqrt(3) / 2)
        assert interior_angle(a5, b, a3) == pytest.approx(240.0, abs=1e-9)

    def test_polygon_angle_sum(self):
        rng = random.Random(3)
        for _ in range(50):
            # random convex polygon via hull of random points
            pts = [npt(rng.random(), rng.random(), i) for i in range(12)]
            hull = convex_hull(pts)
            m = len(hull)
            if m < 3:
                continue
            total = sum(
                interior_angle(hull[i - 1], hull[i], hull[(i + 1) % m])
                for i in range(m)
            )
            assert total == pytest.approx(180.0 * (m - 2), abs=1e-6)

    def test_zero_length_side(self):
        with pytest.raises(DomainError):
            interior_angle(npt(0, 0), npt(0, 0), npt(1, 1))


def quadrilateral_from_angles(alpha: float, beta: float) -> Quadrilateral:
    """Unit path K-A-B-L with given angles at A and B, K and L above AB."""
    a = npt(0.0, 0.0, 1)
    b = npt(1.0, 0.0, 2)
    k = npt(math.cos(math.radians(alpha)), math.sin(math.radians(alpha)), 0)
    l = npt(1 - math.cos(math.radians(beta)), math.sin(math.radians(beta)), 3)
    return Quadrilateral(K=k, A=a, B=b, L=l)


class TestLemmaGeomCheck:
    def test_hypotheses_hold_89(self):
        res = lemma_geom_check(quadrilateral_from_angles(89.0, 89.0))
        assert res.satisfies_hypotheses
        assert res.kl_distance < 1.0

    def test_rectangle_boundary_case(self):
        res = lemma_geom_check(quadrilateral_from_angles(90.0, 90.0))
        assert not res.satisfies_hypotheses  # sum is exactly 180
        assert res.kl_distance == pytest.approx(1.0, abs=1e-9)

    def test_equilateral_fold(self):
        res = lemma_geom_check(quadrilateral_from_angles(60.0, 60.0))
        assert not res.satisfies_hypotheses
        assert res.kl_distance == pytest.approx(0.0, abs=1e-9)

    def test_degenerate_collinear(self):
        quad = Quadrilateral(K=npt(-1, 0, 0), A=npt(0, 0, 1), B=npt(1, 0, 2), L=npt(1, 1, 3))
        with pytest.raises(DomainError, match="collinear"):
            lemma_geom_check(quad)

    def test_opposite_sides_fail_hypotheses(self):
        a = npt(0.0, 0.0, 1)
        b = npt(1.0, 0.0, 2)
        k = npt(math.cos(math.radians(100)), math.sin(math.radians(100)), 0)
        l = npt(1 - math.cos(math.radians(80)), -math.sin(math.radians(80)), 3)
        res = lemma_geom_check(Quadrilateral(K=k, A=a, B=b, L=l))
        assert not res.satisfies_hypotheses

    def test_invalid_side_lengths_rejected(self):
        with pytest.raises(DomainError, match="unit"):
            Quadrilateral(K=npt(0, 2), A=npt(0, 0), B=npt(1, 0), L=npt(1, 1))

    def test_sampling_always_below_one(self):
        rng = random.Random(11)
        for _ in range(2000):
            alpha = rng.uniform(60.0 + 1e-6, 120.0)
            beta = rng.uniform(60.0 + 1e-6, 180.0 - alpha - 1e-6)
            res = lemma_geom_check(quadrilateral_from_angles(alpha, beta))
            assert res.satisfies_hypotheses
            assert res.kl_distance < 1.0
            if alpha > 60.001 and beta > 60.001 and alpha + beta < 179.999:
                assert res.kl_distance < 1.0 - 1e-12


class TestSegmentsCross:
    def test_proper_crossing(self):
        assert segments_cross(npt(0, 0), npt(1, 1), npt(0, 1), npt(1, 0))

    def test_shared_endpoint_ok(self):
        assert not segments_cross(npt(0, 0), npt(1, 0), npt(1, 0), npt(1, 1))

    def test_disjoint(self):
        assert not segments_cross(npt(0, 0), npt(1, 0), npt(0, 1), npt(1, 1))

    def test_t_touch(self):
        assert segments_cross(npt(0, 0), npt(2, 0), npt(1, -1), npt(1, 0))

    def test_collinear_overlap(self):
        assert segments_cross(npt(0, 0), npt(2, 0), npt(1, 0), npt(3, 0))
