"""Named coordinate fixtures, exact where the geometry allows it.

The building block is the unit rhombus: two unit equilateral triangles
glued along a horizontal unit diagonal, i.e. vertices
A=(1/2,0), B=(0,r3/2), C=(-1/2,0), D=(0,-r3/2) with the extra edge AC.
All exact fixtures live in Q(sqrt2, sqrt3); the 13-vertex leaf island is
only known from rounded decimal coordinates and ships in numeric mode.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .exactnum import QuadNum
from .geom import PointSet

F = Fraction
Q = QuadNum

HALF = F(1, 2)


def _q(a=0, b=0, c=0, e=0) -> QuadNum:
    return Q(F(a), F(b), F(c), F(e))


ExactPair = tuple[QuadNum, QuadNum]


@dataclass(frozen=True)
class NamedConstruction:
    name: str
    points: PointSet
    expected: dict = field(default_factory=dict)
    notes: str = ""


def _rhombus(shift: ExactPair, rotated: bool = False) -> list[ExactPair]:
    """Vertices A, B, C, D of a unit rhombus, optionally rotated 90 degrees CCW."""
    base = [
        (_q(a=HALF), _q()),          # A: right tip of the unit diagonal
        (_q(), _q(c=HALF)),          # B: top
        (_q(a=-HALF), _q()),         # C: left tip
        (_q(), _q(c=-HALF)),         # D: bottom
    ]
    out = []
    sx, sy = shift
    for x, y in base:
        if rotated:
            x, y = -y, x
        out.append((x + sx, y + sy))
    return out


def construct_16() -> NamedConstruction:
    """Four unit rhombi in a ring whose connector edges come out at exactly 1.

    Two rhombi are rotated 90 degrees and sit at x = r3/2 + r2/2; two are
    axis-aligned at y = -(r3+r2)/2.  The global 45-degree rotation seen in
    the published figure is cosmetic and omitted.
    """
    sx = _q(b=HALF, c=HALF)           # sqrt3/2 + sqrt2/2
    sy = _q(b=-1, c=-1)               # -(sqrt3 + sqrt2)
    sy_half = _q(b=-HALF, c=-HALF)    # -(sqrt3 + sqrt2)/2
    width = _q(b=1, c=1)              # sqrt2 + sqrt3
    coords: list[ExactPair] = []
    coords += _rhombus((sx, _q()), rotated=True)
    coords += _rhombus((sx, sy), rotated=True)
    coords += _rhombus((_q(), sy_half))
    coords += _rhombus((width, sy_half))
    return NamedConstruction(
        name="sixteen",
        points=PointSet.exact(coords),
        expected={
            "vertex_count": 16,
            "edge_count": 24,
            "regular_degree": 3,
            "is_penny": True,
        },
        notes="minimal 3-regular penny graph; bridgeless",
    )


def construct_24() -> NamedConstruction:
    """Six unit rhombi on the triangular grid, all coordinates in Q(sqrt3)."""
    r3h = F(1, 2)  # coefficient of sqrt3 for "sqrt3/2"

    def pt(x: Fraction, c3: Fraction) -> ExactPair:
        return (_q(a=x), _q(c=c3))

    coords = [
        pt(F(-2), F(0)),        # A1
        pt(F(-5, 2), r3h),      # B1
        pt(F(-3), F(0)),        # C1
        pt(F(-5, 2), -r3h),     # D1
        pt(F(-2), F(1)),        # D2
        pt(F(-1), F(1)),        # A2
        pt(F(-3, 2), F(3, 2)),  # C2
        pt(F(-1, 2), F(3, 2)),  # B2
        pt(F(1, 2), F(3, 2)),   # D3
        pt(F(3, 2), F(3, 2)),   # C3
        pt(F(1), F(1)),         # A3
        pt(F(2), F(1)),         # B3
        pt(F(-2), F(-1)),       # D4
        pt(F(-1), F(-1)),       # A4
        pt(F(-3, 2), F(-3, 2)), # C4
        pt(F(-1, 2), F(-3, 2)), # B4
        pt(F(1, 2), F(-3, 2)),  # D5
        pt(F(3, 2), F(-3, 2)),  # C5
        pt(F(1), F(-1)),        # A5
        pt(F(2), F(-1)),        # B5
        pt(F(5, 2), r3h),       # B6
        pt(F(2), F(0)),         # A6
        pt(F(3), F(0)),         # C6
        pt(F(5, 2), -r3h),      # D6
    ]
    return NamedConstruction(
        name="twentyfour",
        points=PointSet.exact(coords),
        expected={
            "vertex_count": 24,
            "edge_count": 36,
            "regular_degree": 3,
            "is_penny": True,
        },
        notes="the classic 24-point solution on the triangular grid",
    )


def _rot(p: ExactPair, cos: QuadNum, sin: QuadNum) -> ExactPair:
    x, y = p
    return (x * cos - y * sin, x * sin + y * cos)


def construct_three_rhombus() -> NamedConstruction:
    """The failing 12-point attempt with 3 rhombi around a central triangle.

    The central triangle B, C, D sits at circumradius 1 from the origin;
    the minimum pairwise distance is sqrt3 and three points end up with
    more than three closest neighbors.
    """
    r3h = _q(c=HALF)  # sqrt3/2
    b = (_q(), _q(a=1))
    c = (r3h, _q(a=-HALF))
    d = (-r3h, _q(a=-HALF))
    b1 = (_q(), _q(a=1, c=1))                 # (0, 1 + sqrt3)
    c1 = (_q(c=F(3, 2)), _q(a=F(-3, 2)))      # (3*sqrt3/2, -3/2)
    d1 = (-_q(c=F(3, 2)), _q(a=F(-3, 2)))
    k = (r3h, _q(a=-HALF, c=-1))              # (sqrt3/2, -1/2 - sqrt3)
    l = (-r3h, _q(a=-HALF, c=-1))

    cos120, sin120 = _q(a=-HALF), r3h
    cos240, sin240 = _q(a=-HALF), -r3h
    k3 = _rot(k, cos120, sin120)
    l3 = _rot(l, cos120, sin120)
    k2 = _rot(k, cos240, sin240)
    l2 = _rot(l, cos240, sin240)

    coords = [b, c, d, b1, c1, d1, k, l, k3, l3, k2, l2]
    return NamedConstruction(
        name="three-rhombus",
        points=PointSet.exact(coords),
        expected={
            "vertex_count": 12,
            "edge_count": 15,
            "regular_degree": None,
            "is_penny": False,
            "over_degree_count": 3,
        },
        notes="3 points acquire more than three closest neighbors",
    )


#: the drawn matchstick edges; the point set has two further unit pairs
#: (A1-A2 and C1-C2, since the offset vector itself has length 1) that are
#: not part of the graph
MATCHSTICK_8_EDGES = (
    (0, 1), (1, 2), (2, 3), (0, 3), (0, 2),
    (4, 5), (5, 6), (6, 7), (4, 7), (4, 6),
    (1, 5), (3, 7),
)


def construct_matchstick_8() -> NamedConstruction:
    """Two unit rhombi offset by (sqrt3/2, 1/2), joined by edges B1B2, D1D2.

    A 3-regular matchstick graph with 12 unit edges that is not a penny
    graph: the non-adjacent pair A1, C2 sits at squared distance 2-sqrt3.
    """
    coords = _rhombus((_q(), _q())) + _rhombus((_q(c=HALF), _q(a=HALF)))
    offending = _q(a=2, c=-1)  # 2 - sqrt3
    return NamedConstruction(
        name="matchstick8",
        points=PointSet.exact(coords),
        expected={
            "vertex_count": 8,
            "unit_edges": MATCHSTICK_8_EDGES,
            "unit_regular_degree": 3,
            "is_penny": False,
            "offending_pair": (0, 6),
            "offending_squared_distance": offending,
        },
        notes="minimal 3-regular matchstick graph; fails penny separation",
    )


LEAF_ISLAND_13_COORDS = [
    (0.0, 0.0),        # A, the degree-2 attachment vertex
    (0.259, 0.966),    # B1
    (0.259, -0.966),   # B2
    (1.225, 0.707),    # C1
    (1.225, -0.707),   # C2
    (0.966, 1.673),    # D1
    (0.966, -1.673),   # D2
    (1.932, 1.414),    # E1
    (1.932, -1.414),   # E2
    (2.768, 0.866),    # F1
    (2.768, -0.866),   # F2
    (2.268, 0.0),      # G1
    (3.268, 0.0),      # G2
]

#: rounded figure coordinates need a loose edge-classification tolerance
LEAF_ISLAND_TOLERANCE = 1e-2


def construct_leaf_island_13() -> NamedConstruction:
    """The 13-vertex leaf island, from the figure's rounded decimals.

    Ships in numeric mode with tolerance 1e-2 because exact coordinates
    are not recoverable from the published picture.
    """
    return NamedConstruction(
        name="leaf-island13",
        points=PointSet.numeric(LEAF_ISLAND_13_COORDS, tolerance=LEAF_ISLAND_TOLERANCE),
        expected={
            "vertex_count": 13,
            "edge_count": 19,
            "degree_two_count": 1,
            "is_penny": True,
        },
        notes="positive fixture for the leaf-island checks; vertex 0 has degree 2",
    )


CONSTRUCTIONS: dict[str, Callable[[], NamedConstruction]] = {
    "sixteen": construct_16,
    "twentyfour": construct_24,
    "three-rhombus": construct_three_rhombus,
    "matchstick8": construct_matchstick_8,
    "leaf-island13": construct_leaf_island_13,
}
