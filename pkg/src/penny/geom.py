"""Planar primitives: points, squared distances, hulls, polygon angles.

Coordinates are either QuadNum (exact mode) or float (numeric mode).
All comparisons that decide combinatorial structure are exact in exact
mode; angles are always computed in float64 because angles of exact
points are transcendental anyway.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence, Union

import numpy as np

from .errors import DomainError
from .exactnum import QuadNum

EXACT = "exact"
NUMERIC = "numeric"

Coordinate = Union[QuadNum, float]

#: numeric-mode absolute distance below which two points count as duplicates
DUPLICATE_TOLERANCE = 1e-12

#: default numeric-mode relative tolerance for edge classification
DEFAULT_TOLERANCE = 1e-9

#: slack, in degrees, for comparisons against angle thresholds such as 60/180
ANGLE_TOLERANCE_DEG = 1e-9


@dataclass(frozen=True)
class Point:
    x: Coordinate
    y: Coordinate
    id: int = -1


@dataclass(frozen=True)
class PointSet:
    """An ordered planar configuration with a single coordinate mode."""

    points: tuple[Point, ...]
    mode: str
    tolerance: float = DEFAULT_TOLERANCE

    @classmethod
    def exact(cls, coords: Iterable[tuple[QuadNum, QuadNum]]) -> PointSet:
        pts = tuple(Point(x, y, i) for i, (x, y) in enumerate(coords))
        for p in pts:
            if not isinstance(p.x, QuadNum) or not isinstance(p.y, QuadNum):
                raise DomainError("exact mode requires QuadNum coordinates")
        return cls(pts, EXACT)

    @classmethod
    def numeric(
        cls, coords: Iterable[tuple[float, float]], tolerance: float = DEFAULT_TOLERANCE
    ) -> PointSet:
        pts = tuple(Point(float(x), float(y), i) for i, (x, y) in enumerate(coords))
        return cls(pts, NUMERIC, tolerance)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    @cached_property
    def as_array(self) -> np.ndarray:
        """Float64 coordinate array (n, 2); lossy in exact mode."""
        return np.array([[float(p.x), float(p.y)] for p in self.points], dtype=float)

    def subset(self, indices: Sequence[int]) -> PointSet:
        """Sub-configuration keeping the original Point objects (and ids)."""
        pts = tuple(self.points[i] for i in indices)
        return PointSet(pts, self.mode, self.tolerance)


def _check_same_mode(p: Point, q: Point) -> None:
    if isinstance(p.x, QuadNum) != isinstance(q.x, QuadNum):
        raise DomainError("mode mismatch: cannot mix exact and numeric points")


def squared_distance(p: Point, q: Point) -> Coordinate:
    """(px-qx)^2 + (py-qy)^2 in the coordinate type of the inputs."""
    _check_same_mode(p, q)
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def coord_sign(v: Coordinate) -> int:
    if isinstance(v, QuadNum):
        return v.sign()
    return (v > 0) - (v < 0)


def cross(o: Point, a: Point, b: Point) -> Coordinate:
    """Cross product (a-o) x (b-o); positive when o->a->b turns left."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def convex_hull(points: PointSet | Sequence[Point]) -> list[Point]:
    """Extreme points in counterclockwise order (monotone chain).

    Collinear non-extreme boundary points are excluded.  Degenerate
    collinear input returns the two endpoints; a single point returns
    itself.
    """
    pts = list(points)
    if not pts:
        raise DomainError("convex hull of empty set")
    if len(pts) == 1:
        return [pts[0]]

    pts.sort(key=lambda p: (p.x, p.y))

    def build(seq: list[Point]) -> list[Point]:
        chain: list[Point] = []
        for p in seq:
            while len(chain) > 1 and coord_sign(cross(chain[-2], chain[-1], p)) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = build(pts)
    upper = build(pts[::-1])
    hull = lower[:-1] + upper[:-1]
    if not hull:  # all points coincide after dedup upstream; keep endpoints
        hull = [pts[0]]
    return hull


def direction_degrees(origin: Point, target: Point) -> float:
    """Angle of the ray origin->target in degrees, in [0, 360)."""
    dx = float(target.x) - float(origin.x)
    dy = float(target.y) - float(origin.y)
    if dx == 0.0 and dy == 0.0:
        raise DomainError("zero-length direction")
    return math.degrees(math.atan2(dy, dx)) % 360.0


def interior_angle(prev: Point, at: Point, next: Point, orientation: str = "ccw") -> float:
    """Interior angle at `at` for consecutive polygon vertices prev, at, next.

    The polygon is traversed with the stated orientation; interior lies on
    the left for "ccw".  Reflex angles are supported; the result lies in
    (0, 360).
    """
    a_prev = direction_degrees(at, prev)
    a_next = direction_degrees(at, next)
    if orientation == "ccw":
        angle = (a_prev - a_next) % 360.0
    elif orientation == "cw":
        angle = (a_next - a_prev) % 360.0
    else:
        raise DomainError(f"unknown orientation {orientation!r}")
    if angle == 0.0:
        raise DomainError("degenerate spike: incident sides coincide")
    return angle


def ray_angle_between(at: Point, p: Point, q: Point) -> float:
    """Unsigned angle between rays at->p and at->q, in [0, 180] degrees."""
    diff = abs(direction_degrees(at, p) - direction_degrees(at, q)) % 360.0
    return 360.0 - diff if diff > 180.0 else diff


def polygon_signed_area(points: Sequence[Point]) -> float:
    """Shoelace area; positive for counterclockwise simple polygons."""
    total = 0.0
    n = len(points)
    for i in range(n):
        p, q = points[i], points[(i + 1) % n]
        total += float(p.x) * float(q.y) - float(q.x) * float(p.y)
    return total / 2.0


@dataclass(frozen=True)
class Quadrilateral:
    """Path K-A-B-L with |KA| = |AB| = |BL| = 1 within mode tolerance."""

    K: Point
    A: Point
    B: Point
    L: Point

    def __post_init__(self) -> None:
        for p, q in ((self.K, self.A), (self.A, self.B), (self.B, self.L)):
            sqd = squared_distance(p, q)
            if isinstance(sqd, QuadNum):
                if sqd != 1:
                    raise DomainError("quadrilateral sides K-A, A-B, B-L must be unit")
            elif abs(sqd - 1.0) > 1e-9:
                raise DomainError("quadrilateral sides K-A, A-B, B-L must be unit")


@dataclass(frozen=True)
class LemmaGeomResult:
    satisfies_hypotheses: bool
    kl_distance: float
    angle_kab: float
    angle_abl: float


def lemma_geom_check(q: Quadrilateral) -> LemmaGeomResult:
    """Check the hypotheses angle(KAB) > 60, angle(ABL) > 60, sum < 180
    with K and L strictly on the same side of line AB, and report |KL|.

    Non-simple placements (K, L on opposite sides or on the line AB) are
    reported as failing the hypotheses rather than as errors.
    """
    s1 = coord_sign(cross(q.A, q.B, q.K))
    s2 = coord_sign(cross(q.A, q.B, q.L))
    if s1 == 0:
        raise DomainError("degenerate quadrilateral: K, A, B collinear")
    if s2 == 0:
        raise DomainError("degenerate quadrilateral: A, B, L collinear")
    angle_kab = ray_angle_between(q.A, q.K, q.B)
    angle_abl = ray_angle_between(q.B, q.A, q.L)
    tol = ANGLE_TOLERANCE_DEG
    ok = (
        s1 == s2
        and angle_kab > 60.0 + tol
        and angle_abl > 60.0 + tol
        and angle_kab + angle_abl < 180.0 - tol
    )
    kl = math.sqrt(float(squared_distance(q.K, q.L)))
    return LemmaGeomResult(ok, kl, angle_kab, angle_abl)


def _on_segment(p: Point, q: Point, r: Point) -> bool:
    """Whether collinear point r lies within the bounding box of pq."""
    return (
        coord_sign(r.x - p.x) * coord_sign(r.x - q.x) <= 0
        and coord_sign(r.y - p.y) * coord_sign(r.y - q.y) <= 0
    )


def segments_cross(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """Whether closed segments p1p2 and q1q2 intersect beyond a shared endpoint."""
    shared = sum(
        1
        for a in (p1, p2)
        for b in (q1, q2)
        if coord_sign(a.x - b.x) == 0 and coord_sign(a.y - b.y) == 0
    )
    d1 = coord_sign(cross(q1, q2, p1))
    d2 = coord_sign(cross(q1, q2, p2))
    d3 = coord_sign(cross(p1, p2, q1))
    d4 = coord_sign(cross(p1, p2, q2))
    if shared:
        # touching at an endpoint is fine; overlap along a line is not
        if d1 == d2 == d3 == d4 == 0:
            others = []
            if not (coord_sign(p1.x - q1.x) == 0 and coord_sign(p1.y - q1.y) == 0) and not (
                coord_sign(p1.x - q2.x) == 0 and coord_sign(p1.y - q2.y) == 0
            ):
                others.append((p1, (q1, q2)))
            if not (coord_sign(p2.x - q1.x) == 0 and coord_sign(p2.y - q1.y) == 0) and not (
                coord_sign(p2.x - q2.x) == 0 and coord_sign(p2.y - q2.y) == 0
            ):
                others.append((p2, (q1, q2)))
            return any(_on_segment(a, b, r) for r, (a, b) in others)
        return False
    if d1 != d2 and d3 != d4 and d1 != 0 and d2 != 0 and d3 != 0 and d4 != 0:
        return True
    # collinear touching cases
    if d1 == 0 and _on_segment(q1, q2, p1):
        return True
    if d2 == 0 and _on_segment(q1, q2, p2):
        return True
    if d3 == 0 and _on_segment(p1, p2, q1):
        return True
    if d4 == 0 and _on_segment(p1, p2, q2):
        return True
    return False
