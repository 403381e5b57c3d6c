"""Building and interrogating penny graphs.

A penny graph connects exactly the pairs of points realizing the global
minimum pairwise distance.  In exact mode the trichotomy (equal /
strictly greater) is decided with QuadNum arithmetic; in numeric mode an
edge is any pair within a relative tolerance of the minimum, and pairs
falling in the ambiguous band just above it are an error rather than a
guess.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DomainError
from .exactnum import QuadNum
from .geom import (
    DUPLICATE_TOLERANCE,
    EXACT,
    Coordinate,
    Point,
    PointSet,
    convex_hull,
    squared_distance,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class PennyGraph:
    """A point set plus the edge set realized at the minimum distance."""

    points: PointSet
    d_squared: Coordinate
    edges: frozenset[Edge]

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def mode(self) -> str:
        return self.points.mode

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.edges:
            nbrs[i].append(j)
            nbrs[j].append(i)
        return tuple(tuple(sorted(x)) for x in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nb) for nb in self.adjacency)

    def point(self, i: int) -> Point:
        return self.points[i]


def _pairwise_squared_exact(ps: PointSet) -> dict[Edge, QuadNum]:
    out: dict[Edge, QuadNum] = {}
    for i, j in itertools.combinations(range(len(ps)), 2):
        out[(i, j)] = squared_distance(ps[i], ps[j])
    return out


def build_penny_graph(ps: PointSet) -> PennyGraph:
    """Connect exactly the pairs at the minimum pairwise distance.

    Raises DomainError on fewer than two points, duplicate points, or
    (numeric mode) pairs inside the ambiguous band between
    d^2*(1+tol) and d^2*(1+10*tol).
    """
    n = len(ps)
    if n < 2:
        raise DomainError("penny graph needs at least 2 points")

    if ps.mode == EXACT:
        sqd = _pairwise_squared_exact(ps)
        for pair, value in sqd.items():
            if value.is_zero():
                raise DomainError(f"duplicate points {pair[0]} and {pair[1]}")
        d2 = min(sqd.values())
        edges = frozenset(pair for pair, value in sqd.items() if value == d2)
        return PennyGraph(ps, d2, edges)

    arr = ps.as_array
    diff = arr[:, None, :] - arr[None, :, :]
    sq = np.einsum("ijk,ijk->ij", diff, diff)
    iu = np.triu_indices(n, k=1)
    values = sq[iu]
    dup = values < DUPLICATE_TOLERANCE**2
    if dup.any():
        k = int(np.argmax(dup))
        raise DomainError(f"duplicate points {iu[0][k]} and {iu[1][k]}")
    d2 = float(values.min())
    tol = ps.tolerance
    is_edge = values <= d2 * (1.0 + tol)
    ambiguous = ~is_edge & (values < d2 * (1.0 + 10.0 * tol))
    if ambiguous.any():
        k = int(np.argmax(ambiguous))
        raise DomainError(
            f"ambiguous pair ({iu[0][k]}, {iu[1][k]}): squared distance "
            f"{values[k]!r} falls between d^2*(1+tol) and d^2*(1+10*tol)"
        )
    edges = frozenset(
        (int(i), int(j)) for i, j in zip(iu[0][is_edge], iu[1][is_edge])
    )
    return PennyGraph(ps, d2, edges)


def neighbor_counts(g: PennyGraph) -> list[int]:
    """Degree of each vertex in the minimum-distance graph."""
    return list(g.degrees)


def is_k_regular(g: PennyGraph, k: int) -> bool:
    regular = all(d == k for d in g.degrees)
    if regular and k == 3:
        assert 2 * len(g.edges) == 3 * g.n and g.n % 2 == 0
    return regular


@dataclass(frozen=True)
class Puzzle1Witness:
    vertex_id: int
    count: int


def _min_subset_indices(ps: PointSet) -> tuple[list[int], Coordinate]:
    """Indices of points whose nearest-neighbor distance is the global min."""
    n = len(ps)
    if n < 2:
        raise DomainError("need at least 2 points")
    if ps.mode == EXACT:
        sqd = _pairwise_squared_exact(ps)
        for pair, value in sqd.items():
            if value.is_zero():
                raise DomainError(f"duplicate points {pair[0]} and {pair[1]}")
        d2 = min(sqd.values())
        members = set()
        for (i, j), value in sqd.items():
            if value == d2:
                members.add(i)
                members.add(j)
        return sorted(members), d2
    arr = ps.as_array
    diff = arr[:, None, :] - arr[None, :, :]
    sq = np.einsum("ijk,ijk->ij", diff, diff)
    np.fill_diagonal(sq, np.inf)
    nearest = sq.min(axis=1)
    d2 = float(nearest.min())
    members = np.nonzero(nearest <= d2 * (1.0 + ps.tolerance))[0]
    return [int(i) for i in members], d2


def _closest_neighbor_count(ps: PointSet, i: int, d2: Coordinate) -> int:
    count = 0
    for j in range(len(ps)):
        if j == i:
            continue
        sqd = squared_distance(ps[i], ps[j])
        if isinstance(sqd, QuadNum):
            if sqd == d2:
                count += 1
        elif sqd <= d2 * (1.0 + ps.tolerance):
            count += 1
    return count


def puzzle1_witness(ps: PointSet) -> Puzzle1Witness:
    """A vertex with at most 3 closest neighbors, by the hull argument.

    Restrict to the subset whose nearest-neighbor distance equals the
    global minimum d, take an extreme point A of its convex hull, and
    count A's neighbors at distance d.  Neighbors of A are pairwise at
    least d apart, so they subtend angles of at least 60 degrees inside
    an interior angle below 180, forcing the count to be at most 3.
    """
    members, d2 = _min_subset_indices(ps)
    hull = convex_hull([ps[i] for i in members])
    a = hull[0]
    pos = next(i for i in members if ps[i] is a)
    count = _closest_neighbor_count(ps, pos, d2)
    return Puzzle1Witness(vertex_id=ps[pos].id if ps[pos].id >= 0 else pos, count=count)


def reduce_to_min_subset(ps: PointSet) -> PointSet:
    """The subset whose nearest-neighbor distance equals the global minimum.

    When every input point has exactly 3 closest neighbors, the subset is
    closed under taking closest neighbors (asserted).
    """
    members, d2 = _min_subset_indices(ps)
    everyone_cubic = all(
        _closest_neighbor_count_at_own_min(ps, i) == 3 for i in range(len(ps))
    )
    if everyone_cubic:
        member_set = set(members)
        for i in members:
            for j in range(len(ps)):
                if j == i:
                    continue
                sqd = squared_distance(ps[i], ps[j])
                if isinstance(sqd, QuadNum):
                    hit = sqd == d2
                else:
                    hit = sqd <= d2 * (1.0 + ps.tolerance)
                if hit:
                    assert j in member_set, "min-distance subset is not closed"
    return ps.subset(members)


def _closest_neighbor_count_at_own_min(ps: PointSet, i: int) -> int:
    best: Coordinate | None = None
    for j in range(len(ps)):
        if j == i:
            continue
        sqd = squared_distance(ps[i], ps[j])
        if best is None or sqd < best:
            best = sqd
    assert best is not None
    return _closest_neighbor_count(ps, i, best)


def closest_neighbor_counts(ps: PointSet) -> list[int]:
    """Per-point count of neighbors at that point's own nearest distance."""
    if ps.mode != EXACT:
        arr = ps.as_array
        diff = arr[:, None, :] - arr[None, :, :]
        sq = np.einsum("ijk,ijk->ij", diff, diff)
        np.fill_diagonal(sq, np.inf)
        nearest = sq.min(axis=1)
        hits = sq <= nearest[:, None] * (1.0 + ps.tolerance)
        return [int(row.sum()) for row in hits]
    return [_closest_neighbor_count_at_own_min(ps, i) for i in range(len(ps))]
