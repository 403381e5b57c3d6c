import math
import random
from fractions import Fraction

import numpy as np
import pytest

from penny.errors import DomainError
from penny.exactnum import SQRT2, SQRT3, QuadNum
from penny.geom import PointSet
from penny.pennygraph import (
    build_penny_graph,
    closest_neighbor_counts,
    is_k_regular,
    neighbor_counts,
    puzzle1_witness,
    reduce_to_min_subset,
)

F = Fraction
Q = QuadNum


def exact_square():
    return PointSet.exact(
        [(Q(0), Q(0)), (Q(1), Q(0)), (Q(1), Q(1)), (Q(0), Q(1))]
    )


class TestBuild:
    def test_unit_square(self):
        g = build_penny_graph(exact_square())
        assert g.d_squared == 1
        assert len(g.edges) == 4
        assert (0, 2) not in g.edges and (1, 3) not in g.edges

    def test_sixteen(self, graph_16):
        assert graph_16.d_squared == 1
        assert len(graph_16.edges) == 24
        assert is_k_regular(graph_16, 3)

    def test_three_rhombus_over_degrees(self, fixture_three_rhombus):
        g = build_penny_graph(fixture_three_rhombus.points)
        assert not is_k_regular(g, 3)
        over = [d for d in g.degrees if d > 3]
        assert len(over) == 3

    def test_too_few_points(self):
        with pytest.raises(DomainError, match="at least 2"):
            build_penny_graph(PointSet.numeric([(0.0, 0.0)]))

    def test_duplicates_exact(self):
        ps = PointSet.exact([(Q(0), Q(0)), (Q(0), Q(0)), (Q(1), Q(0))])
        with pytest.raises(DomainError, match="duplicate"):
            build_penny_graph(ps)

    def test_duplicates_numeric(self):
        ps = PointSet.numeric([(0.0, 0.0), (1e-14, 0.0), (1.0, 0.0)])
        with pytest.raises(DomainError, match="duplicate"):
            build_penny_graph(ps)

    def test_ambiguous_band_rejected(self):
        # second gap lands strictly inside (d^2(1+tol), d^2(1+10 tol))
        gap = math.sqrt(1.0 + 5e-9)
        ps = PointSet.numeric([(0.0, 0.0), (1.0, 0.0), (1.0 + gap, 0.0)])
        with pytest.raises(DomainError, match="ambiguous"):
            build_penny_graph(ps)

    def test_just_outside_band_is_fine(self):
        gap = math.sqrt(1.0 + 2e-8)
        ps = PointSet.numeric([(0.0, 0.0), (1.0, 0.0), (1.0 + gap, 0.0)])
        g = build_penny_graph(ps)
        assert len(g.edges) == 1


class TestSeparation:
    def test_exact_trichotomy(self, graph_16):
        # separation is assertable exactly: every non-edge pair strictly
        # exceeds the minimum squared distance
        import itertools

        from penny.geom import squared_distance

        for i, j in itertools.combinations(range(graph_16.n), 2):
            sqd = squared_distance(graph_16.point(i), graph_16.point(j))
            if (i, j) in graph_16.edges:
                assert sqd == graph_16.d_squared
            else:
                assert sqd > graph_16.d_squared


class TestInvariance:
    def test_exact_isometries(self, fixture_16):
        base = build_penny_graph(fixture_16.points)
        # translate, rotate 90 degrees, and scale by 3/2: same edge set
        moved = []
        for p in fixture_16.points:
            x, y = p.x + SQRT2, p.y - SQRT3
            x, y = -y, x
            moved.append((x * F(3, 2), y * F(3, 2)))
        g2 = build_penny_graph(PointSet.exact(moved))
        assert g2.edges == base.edges
        assert g2.d_squared == QuadNum(F(9, 4))

    def test_numeric_rotation(self, fixture_leaf_island):
        base = build_penny_graph(fixture_leaf_island.points)
        theta = 0.7331
        c, s = math.cos(theta), math.sin(theta)
        pts = [
            (c * float(p.x) - s * float(p.y) + 5.0, s * float(p.x) + c * float(p.y) - 2.0)
            for p in fixture_leaf_island.points
        ]
        g2 = build_penny_graph(
            PointSet.numeric(pts, tolerance=fixture_leaf_island.points.tolerance)
        )
        assert g2.edges == base.edges


class TestDegrees:
    def test_equilateral_triangle(self):
        ps = PointSet.exact(
            [(Q(0), Q(0)), (Q(1), Q(0)), (Q(F(1, 2)), SQRT3 * F(1, 2))]
        )
        assert neighbor_counts(build_penny_graph(ps)) == [2, 2, 2]

    def test_twentyfour_all_three(self, graph_24):
        assert neighbor_counts(graph_24) == [3] * 24

    def test_hexagon_with_center(self):
        h = F(1, 2)
        r = SQRT3 * h
        coords = [
            (Q(1), Q(0)),
            (Q(h), r),
            (Q(-h), r),
            (Q(-1), Q(0)),
            (Q(-h), -r),
            (Q(h), -r),
            (Q(0), Q(0)),
        ]
        g = build_penny_graph(PointSet.exact(coords))
        assert neighbor_counts(g) == [3, 3, 3, 3, 3, 3, 6]

    def test_is_k_regular(self, graph_16):
        assert is_k_regular(build_penny_graph(exact_square()), 2)
        assert is_k_regular(graph_16, 3)
        assert not is_k_regular(graph_16, 2)


class TestPuzzle1:
    def test_equilateral_triangle(self):
        ps = PointSet.exact(
            [(Q(0), Q(0)), (Q(1), Q(0)), (Q(F(1, 2)), SQRT3 * F(1, 2))]
        )
        w = puzzle1_witness(ps)
        assert w.count == 2

    def test_sixteen(self, fixture_16):
        w = puzzle1_witness(fixture_16.points)
        assert w.count == 3

    def test_random_sets_bounded_by_three(self):
        rng = np.random.default_rng(987)
        for _ in range(500):
            n = int(rng.integers(2, 51))
            pts = rng.uniform(0.0, 1.0, size=(n, 2))
            ps = PointSet.numeric([tuple(p) for p in pts])
            w = puzzle1_witness(ps)
            assert w.count <= 3
            # agrees with brute-force closest-neighbor counting at the witness
            arr = ps.as_array
            diff = arr[:, None, :] - arr[None, :, :]
            sq = np.einsum("ijk,ijk->ij", diff, diff)
            np.fill_diagonal(sq, np.inf)
            d2 = sq.min()
            brute = int((sq[w.vertex_id] <= d2 * (1 + ps.tolerance)).sum())
            assert brute == w.count


class TestReduce:
    def test_identity_on_single_distance(self):
        ps = exact_square()
        sub = reduce_to_min_subset(ps)
        assert [p.id for p in sub] == [0, 1, 2, 3]

    def test_two_squares_one_scaled(self):
        # brute force over the 8 points: the unscaled square has min gap 1,
        # the scaled one (side 2, shifted by 10) never reaches distance 1
        unit = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
        scaled = [(10.0 + 2 * x, 2 * y) for x, y in unit]
        ps = PointSet.numeric(unit + scaled)
        sub = reduce_to_min_subset(ps)
        assert [p.id for p in sub] == [0, 1, 2, 3]

    def test_sixteen_identity_and_closure(self, fixture_16):
        sub = reduce_to_min_subset(fixture_16.points)
        assert len(sub) == 16

    def test_closest_neighbor_counts_match_modes(self, fixture_three_rhombus):
        exact_counts = closest_neighbor_counts(fixture_three_rhombus.points)
        pts = [(float(p.x), float(p.y)) for p in fixture_three_rhombus.points]
        numeric_counts = closest_neighbor_counts(PointSet.numeric(pts))
        assert exact_counts == numeric_counts
        assert sum(1 for c in exact_counts if c > 3) == 3
