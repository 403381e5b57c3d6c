import itertools
from fractions import Fraction

import pytest

from penny.constructions import (
    CONSTRUCTIONS,
    MATCHSTICK_8_EDGES,
    construct_16,
    construct_24,
    construct_leaf_island_13,
    construct_matchstick_8,
    construct_three_rhombus,
)
from penny.exactnum import QuadNum
from penny.files import parse_pointset, serialize_pointset
from penny.geom import EXACT, segments_cross, squared_distance
from penny.pennygraph import (
    build_penny_graph,
    closest_neighbor_counts,
    is_k_regular,
)
from penny.structure import find_bridges, island_decomposition


class TestSixteen:
    def test_counts(self, fixture_16, graph_16):
        assert fixture_16.expected["vertex_count"] == len(fixture_16.points) == 16
        assert len(graph_16.edges) == 24
        assert is_k_regular(graph_16, 3)
        assert graph_16.d_squared == 1

    def test_connector_length(self, fixture_16):
        # points (sqrt2/2, 0) and (0, -sqrt2/2) sit at squared distance 1/2 + 1/2
        half_sqrt2 = QuadNum(0, Fraction(1, 2))
        by_coord = {(p.x, p.y): p for p in fixture_16.points}
        p = by_coord[(half_sqrt2, QuadNum(0))]
        q = by_coord[(QuadNum(0), -half_sqrt2)]
        assert squared_distance(p, q) == 1

    def test_bridgeless(self, graph_16):
        assert not find_bridges(graph_16)
        dec = island_decomposition(graph_16)
        assert len(dec.tree_nodes) == 1


class TestTwentyFour:
    def test_counts(self, graph_24):
        assert graph_24.n == 24
        assert len(graph_24.edges) == 36
        assert is_k_regular(graph_24, 3)

    def test_exact_unit_distance(self, graph_24):
        assert graph_24.d_squared == 1

    def test_coordinates_in_q_sqrt3(self, fixture_24):
        for p in fixture_24.points:
            assert p.x.b == 0 and p.x.e == 0
            assert p.y.b == 0 and p.y.e == 0

    def test_bridgeless(self, graph_24):
        assert not find_bridges(graph_24)


class TestThreeRhombus:
    def test_not_three_regular(self, fixture_three_rhombus):
        g = build_penny_graph(fixture_three_rhombus.points)
        assert not is_k_regular(g, 3)

    def test_exactly_three_over_degree(self, fixture_three_rhombus):
        counts = closest_neighbor_counts(fixture_three_rhombus.points)
        assert sum(1 for c in counts if c > 3) == 3

    def test_extra_short_distance_pairs_beyond_drawn_rhombi(self, fixture_three_rhombus):
        # the drawn rhombus arms are the three U-shapes (K-C, K-L, L-D and
        # rotations); the minimum-distance graph has pairs beyond them
        g = build_penny_graph(fixture_three_rhombus.points)
        assert len(g.edges) == 15 > 9

    def test_min_distance_is_sqrt3(self, fixture_three_rhombus):
        g = build_penny_graph(fixture_three_rhombus.points)
        assert g.d_squared == 3


class TestMatchstick8:
    def test_twelve_unit_edges_three_regular(self, fixture_matchstick):
        pts = fixture_matchstick.points
        deg = [0] * 8
        for i, j in MATCHSTICK_8_EDGES:
            assert squared_distance(pts[i], pts[j]) == 1
            deg[i] += 1
            deg[j] += 1
        assert deg == [3] * 8
        assert len(MATCHSTICK_8_EDGES) == 12

    def test_straight_line_planar(self, fixture_matchstick):
        pts = fixture_matchstick.points
        for (a, b), (c, d) in itertools.combinations(MATCHSTICK_8_EDGES, 2):
            assert not segments_cross(pts[a], pts[b], pts[c], pts[d])

    def test_penny_validation_fails(self, fixture_matchstick):
        g = build_penny_graph(fixture_matchstick.points)
        offending = fixture_matchstick.expected["offending_squared_distance"]
        assert offending == QuadNum(2, 0, -1)  # 2 - sqrt3
        assert g.d_squared == offending
        assert g.d_squared < 1
        pair = fixture_matchstick.expected["offending_pair"]
        assert pair in g.edges
        assert pair not in set(MATCHSTICK_8_EDGES)
        assert not is_k_regular(g, 3)


class TestLeafIsland13:
    def test_counts(self, fixture_leaf_island, graph_leaf_island):
        assert graph_leaf_island.n == 13
        assert len(graph_leaf_island.edges) == 19
        assert sorted(graph_leaf_island.degrees) == [2] + [3] * 12

    def test_degree_two_vertex_is_attachment(self, graph_leaf_island):
        assert graph_leaf_island.degrees[0] == 2


class TestRoundTrips:
    @pytest.mark.parametrize("name", sorted(CONSTRUCTIONS))
    def test_serialize_parse_revalidates(self, name):
        built = CONSTRUCTIONS[name]()
        text = serialize_pointset(built.points)
        again = parse_pointset(text)
        assert serialize_pointset(again) == text
        assert len(again) == len(built.points)
        g1 = build_penny_graph(built.points)
        g2 = build_penny_graph(again)
        assert g1.edges == g2.edges
        assert g1.d_squared == g2.d_squared

    def test_exact_fixture_coordinates_preserved(self, fixture_16):
        text = serialize_pointset(fixture_16.points)
        again = parse_pointset(text)
        assert again.mode == EXACT
        for p, q in zip(fixture_16.points, again.points):
            assert p.x == q.x and p.y == q.y


def test_sixteen_is_minimal_shipped_regular_fixture():
    cubic_penny = []
    for name, factory in CONSTRUCTIONS.items():
        built = factory()
        g = build_penny_graph(built.points)
        if is_k_regular(g, 3):
            cubic_penny.append((name, g.n))
    assert cubic_penny
    assert min(n for _, n in cubic_penny) == 16
