"""The minimality proof's counting arguments as executable checkers.

Boundary edges of a bridgeless 3-regular penny graph are classified as
triangle edges (bounding a 3-cycle face) or free edges; their angle
contributions must sum to the interior-angle total 180(n-2) of the
boundary polygon, every triangle edge contributing 120 degrees and every
free edge at least 180.  On top of that sit the k >= 6 inequality, the
vertex-count ledger of the main theorem, the parallelogram contradiction
detector, and the leaf-island case analysis.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import DomainError
from .geom import Point, direction_degrees
from .pennygraph import Edge, PennyGraph
from .structure import (
    DirectedEdge,
    RotationSystem,
    boundary_edges,
    classify_bridges,
    find_bridges,
    outer_face,
    rotation_system,
    trace_faces,
)

#: all ledger angle equalities are checked to this many degrees
ANGLE_TOL = 1e-6

TRIANGLE = "triangle"
FREE = "free"


@dataclass(frozen=True)
class _BoundaryContext:
    rs: RotationSystem
    outer_walk: tuple[DirectedEdge, ...]
    ccw_cycle: tuple[int, ...]              # boundary vertices, interior on the left
    succ: dict[int, int]                    # successor along the CCW cycle
    inner_of: dict[int, int]                # boundary vertex -> its inner neighbor
    faces: tuple[tuple[DirectedEdge, ...], ...]
    face_of: dict[DirectedEdge, int]
    outer_index: int


def _context(g: PennyGraph) -> _BoundaryContext:
    if any(d != 3 for d in g.degrees):
        raise DomainError("ledger requires a 3-regular penny graph")
    rs = rotation_system(g)
    walk = outer_face(g, rs)
    bridges = find_bridges(g)
    if bridges:
        outer = classify_bridges(g, rs, bridges).outer
        if outer:
            raise DomainError(f"ledger requires no outer bridges, found {sorted(outer)}")
    faces = trace_faces(g, rs)
    face_of: dict[DirectedEdge, int] = {}
    for i, f in enumerate(faces):
        for de in f:
            face_of[de] = i
    outer_index = faces.index(walk) if walk in faces else next(
        i for i, f in enumerate(faces) if set(f) == set(walk)
    )

    # the outer walk runs clockwise around the graph; reverse for CCW
    cw_vertices = [u for u, _ in walk]
    ccw = tuple(reversed(cw_vertices))
    if len(set(ccw)) != len(ccw):
        raise DomainError("boundary is not a simple polygon")
    succ = {ccw[i]: ccw[(i + 1) % len(ccw)] for i in range(len(ccw))}

    on_boundary = boundary_edges(walk)
    inner_of: dict[int, int] = {}
    for v in ccw:
        inner = [w for w in g.adjacency[v] if (min(v, w), max(v, w)) not in on_boundary]
        if len(inner) != 1:
            raise DomainError(f"boundary vertex {v} has {len(inner)} inner edges, need 1")
        inner_of[v] = inner[0]
    return _BoundaryContext(rs, tuple(walk), ccw, succ, inner_of, tuple(tuple(f) for f in faces), face_of, outer_index)


def classify_outer_edges(
    g: PennyGraph, boundary: tuple[DirectedEdge, ...] | None = None
) -> dict[Edge, str]:
    """Map each boundary edge to "triangle" or "free".

    An outer edge is a triangle edge exactly when the bounded face on its
    inner side is a 3-cycle.
    """
    ctx = _context(g)
    walk = boundary if boundary is not None else ctx.outer_walk
    kinds: dict[Edge, str] = {}
    for u, v in walk:
        inner_face = ctx.faces[ctx.face_of[(v, u)]]
        kinds[(min(u, v), max(u, v))] = TRIANGLE if len(inner_face) == 3 else FREE
    return kinds


def angle_contribution(g: PennyGraph, rs: RotationSystem, outer_edge: Edge) -> float:
    """Sum of the two interior angles between an outer edge and the inner
    edges at its endpoints, in degrees."""
    ctx = _context(g)
    return _contribution(g, ctx, outer_edge)


def _contribution(g: PennyGraph, ctx: _BoundaryContext, edge: Edge) -> float:
    u, v = edge
    if ctx.succ.get(u) == v:
        p, q = u, v
    elif ctx.succ.get(v) == u:
        p, q = v, u
    else:
        raise DomainError(f"edge {edge} is not on the boundary")
    pp, pq = g.point(p), g.point(q)
    pk = g.point(ctx.inner_of[p])
    qk = g.point(ctx.inner_of[q])
    at_p = (direction_degrees(pp, pk) - direction_degrees(pp, pq)) % 360.0
    at_q = (direction_degrees(pq, pp) - direction_degrees(pq, qk)) % 360.0
    return at_p + at_q


@dataclass(frozen=True)
class EdgeContribution:
    edge: Edge
    kind: str
    contribution_degrees: float


@dataclass(frozen=True)
class AngleLedger:
    n: int          # boundary edge count
    k: int          # triangle edges
    r: int          # triangle edges belonging to boundary rhombi
    per_edge: tuple[EdgeContribution, ...]
    total_degrees: float


def _triangle_faces(ctx: _BoundaryContext) -> list[frozenset[int]]:
    out = []
    for i, f in enumerate(ctx.faces):
        if i != ctx.outer_index and len(f) == 3:
            out.append(frozenset(u for u, _ in f))
    return out


def _rhombus_edge_count(g: PennyGraph, ctx: _BoundaryContext, kinds: dict[Edge, str]) -> int:
    """Count triangle edges whose triangle face glues to another triangle.

    Two adjacent equilateral-triangle faces form a unit rhombus (four unit
    sides plus the shared unit diagonal), so membership reduces to face
    adjacency.
    """
    triangle_face_ids = {
        i for i, f in enumerate(ctx.faces) if i != ctx.outer_index and len(f) == 3
    }
    r = 0
    for edge, kind in kinds.items():
        if kind != TRIANGLE:
            continue
        u, v = edge
        de = (u, v) if ctx.succ.get(u) == v else (v, u)
        face_id = ctx.face_of[(de[1], de[0])]
        face = ctx.faces[face_id]
        glued = False
        for a, b in face:
            if (min(a, b), max(a, b)) == edge:
                continue
            if ctx.face_of[(b, a)] in triangle_face_ids:
                glued = True
                break
        if glued:
            r += 1
    return r


def build_angle_ledger(g: PennyGraph) -> AngleLedger:
    ctx = _context(g)
    kinds = classify_outer_edges(g, ctx.outer_walk)
    per = []
    total = 0.0
    for edge in sorted(kinds):
        c = _contribution(g, ctx, edge)
        per.append(EdgeContribution(edge, kinds[edge], c))
        total += c
    n = len(kinds)
    k = sum(1 for e in per if e.kind == TRIANGLE)
    r = _rhombus_edge_count(g, ctx, kinds)
    return AngleLedger(n=n, k=k, r=r, per_edge=tuple(per), total_degrees=total)


@dataclass(frozen=True)
class Eq1Result:
    lhs_degrees: float   # 180(n-2) - 120k, the free edges' total contribution
    rhs_degrees: float   # 180(n-k), the Lemma-2 lower bound
    holds: bool
    k_lower_bound_holds: bool  # k >= 6


def check_eq1(ledger: AngleLedger) -> Eq1Result:
    lhs = 180.0 * (ledger.n - 2) - 120.0 * ledger.k
    rhs = 180.0 * (ledger.n - ledger.k)
    return Eq1Result(
        lhs_degrees=lhs,
        rhs_degrees=rhs,
        holds=lhs >= rhs - ANGLE_TOL,
        k_lower_bound_holds=ledger.k >= 6,
    )


@dataclass(frozen=True)
class MinimalityReport:
    vertex_count: int
    n: int
    k: int
    r: int
    ledger: AngleLedger
    eq1: Eq1Result
    two_k: int
    vertices_from_triangle_edges: int  # 3(k-r) + 2r = 3k - r
    eighteen_minus_r: int              # the k=6 specialization 3(6-r) + 2r
    bounds_consistent: bool
    sub14_obstruction: str

    def summary_lines(self) -> list[str]:
        return [
            f"vertices: {self.vertex_count}",
            f"boundary n: {self.n}",
            f"triangle edges k: {self.k}",
            f"rhombus triangle edges r: {self.r}",
            f"eq1: {self.eq1.lhs_degrees:.6f} >= {self.eq1.rhs_degrees:.6f}"
            f" ({'holds' if self.eq1.holds else 'fails'})",
            f"k >= 6: {'holds' if self.eq1.k_lower_bound_holds else 'fails'}",
            f"2k <= V: {self.two_k} <= {self.vertex_count}",
            f"triangle-edge vertex count 3k-r: {self.vertices_from_triangle_edges}",
            f"if V <= 14: {self.sub14_obstruction}",
        ]


def theorem1_ledger(g: PennyGraph) -> MinimalityReport:
    """The vertex-count ledger for bridgeless 3-regular penny graphs."""
    ledger = build_angle_ledger(g)
    eq1 = check_eq1(ledger)
    v = g.n
    n, k, r = ledger.n, ledger.k, ledger.r
    two_k = 2 * k
    contributions_ok = abs(ledger.total_degrees - 180.0 * (n - 2)) <= ANGLE_TOL
    triangle_ok = all(
        abs(e.contribution_degrees - 120.0) <= ANGLE_TOL
        for e in ledger.per_edge
        if e.kind == TRIANGLE
    )
    free_ok = all(
        e.contribution_degrees >= 180.0 - ANGLE_TOL
        for e in ledger.per_edge
        if e.kind == FREE
    )
    bounds = (
        eq1.holds
        and eq1.k_lower_bound_holds
        and two_k <= v
        and contributions_ok
        and triangle_ok
        and free_ok
        and r % 2 == 0
    )
    if k >= 8:
        obstruction = f"2k <= V forces V >= {two_k} > 14"
    elif k == 7:
        obstruction = "k = 7 impossible: rhombus triangle edges pair up, so r is even"
    elif k == 6:
        if r >= 4:
            obstruction = (
                "k = 6 makes Eq. 1 tight, so each free edge contributes exactly 180"
                " degrees and any boundary rhombus yields the parallelogram"
                " contradiction"
            )
        else:
            obstruction = f"18 - r = {18 - r} > 14 vertices required"
    else:
        obstruction = "k >= 6 (Eq. 1) already fails; not a valid bridgeless case"
    return MinimalityReport(
        vertex_count=v,
        n=n,
        k=k,
        r=r,
        ledger=ledger,
        eq1=eq1,
        two_k=two_k,
        vertices_from_triangle_edges=3 * k - r,
        eighteen_minus_r=18 - r,
        bounds_consistent=bounds,
        sub14_obstruction=obstruction,
    )


# -- parallelogram contradiction (Theorem 1 boundary case) -------------------


def _walk_vertex_neighbors(walk: tuple[DirectedEdge, ...] | list[DirectedEdge]) -> dict[int, set[int]]:
    nbrs: dict[int, set[int]] = {}
    for u, v in walk:
        nbrs.setdefault(u, set()).add(v)
        nbrs.setdefault(v, set()).add(u)
    return nbrs


def _inner_partner(
    g: PennyGraph, walk_nbrs: dict[int, set[int]], x: int, other: int
) -> int:
    candidates = [w for w in g.adjacency[x] if w != other]
    non_walk = [w for w in candidates if w not in walk_nbrs.get(x, set())]
    if len(non_walk) == 1:
        return non_walk[0]
    if len(candidates) == 1:
        return candidates[0]
    raise DomainError(f"cannot determine the inner edge at vertex {x}")


def _all_rhombi(g: PennyGraph, faces: list[list[DirectedEdge]], outer_index: int) -> list[tuple[frozenset[int], frozenset[int]]]:
    """Pairs of glued triangle faces, as (vertex set, shared diagonal)."""
    tri = [
        (i, frozenset(u for u, _ in f))
        for i, f in enumerate(faces)
        if i != outer_index and len(f) == 3
    ]
    out = []
    for (i, vi), (j, vj) in itertools.combinations(tri, 2):
        shared = vi & vj
        if len(shared) == 2:
            out.append((vi | vj, shared))
    return out


def parallelogram_contradiction_check(g: PennyGraph, free_edge: Edge) -> bool:
    """Detect the boundary configuration that forces |KL| = 1.

    For a free edge AB with inner edges AK and BL, where one endpoint's
    inner vertex sits inside a boundary rhombus with all three of its
    edges, a contribution of exactly 180 degrees makes KABL a
    parallelogram and hence |KL| = 1, giving that rhombus vertex an
    illegal fourth edge.  Returns True when the configuration is present.
    """
    a, b = free_edge
    if (min(a, b), max(a, b)) not in {(min(u, v), max(u, v)) for u, v in g.edges}:
        raise DomainError(f"{free_edge} is not an edge")
    rs = rotation_system(g)
    walk = outer_face(g, rs)
    on_boundary = boundary_edges(walk)
    if (min(a, b), max(a, b)) not in on_boundary:
        raise DomainError(f"{free_edge} is not a boundary edge")
    walk_nbrs = _walk_vertex_neighbors(walk)
    k = _inner_partner(g, walk_nbrs, a, b)
    l = _inner_partner(g, walk_nbrs, b, a)

    faces = trace_faces(g, rs)
    outer_idx = faces.index(walk) if walk in faces else min(
        range(len(faces)), key=lambda i: _face_area(g, faces[i])
    )
    rhombi = _all_rhombi(g, faces, outer_idx)

    def in_rhombus(endpoint: int, inner: int) -> bool:
        for verts, _diag in rhombi:
            if endpoint in verts and inner in verts:
                inside = sum(1 for w in g.adjacency[inner] if w in verts)
                if inside == 3:
                    return True
        return False

    if in_rhombus(b, l):
        pass
    elif in_rhombus(a, k):
        a, b, k, l = b, a, l, k
    else:
        raise DomainError(f"free edge {free_edge} is not adjacent to a boundary rhombus")

    pa, pb, pk, pl = g.point(a), g.point(b), g.point(k), g.point(l)
    angle_kab = _ray_angle(pa, pk, pb)
    angle_abl = _ray_angle(pb, pa, pl)
    if abs(angle_kab + angle_abl - 180.0) <= ANGLE_TOL:
        kl = math.hypot(float(pk.x) - float(pl.x), float(pk.y) - float(pl.y))
        d = math.sqrt(float(g.d_squared))
        assert abs(kl - d) <= 1e-6 * max(1.0, d), "parallelogram should force |KL| = d"
        return True
    return False


def _ray_angle(at: Point, p: Point, q: Point) -> float:
    diff = abs(direction_degrees(at, p) - direction_degrees(at, q)) % 360.0
    return 360.0 - diff if diff > 180.0 else diff


def _face_area(g: PennyGraph, face: list[DirectedEdge]) -> float:
    total = 0.0
    for u, v in face:
        pu, pv = g.point(u), g.point(v)
        total += float(pu.x) * float(pv.y) - float(pv.x) * float(pu.y)
    return total / 2.0


# -- leaf islands (Lemma 3) ---------------------------------------------------


def forced_pentagon_side_lengths() -> tuple[float, float]:
    """Side lengths forced on the n=5 pentagon with angles 60,120,120,120,120.

    The three sides flanked by 120-degree angles are unit; the two sides
    meeting at the 60-degree apex are then determined by intersecting the
    closing rays.  They come out at length 2, so the pentagon cannot be
    equilateral.
    """
    a2 = (0.0, 0.0)
    a3 = (1.0, 0.0)
    a4 = (a3[0] + math.cos(math.radians(60)), a3[1] + math.sin(math.radians(60)))
    a5 = (a4[0] + math.cos(math.radians(120)), a4[1] + math.sin(math.radians(120)))
    # ray from a2 at 120 degrees meets ray from a5 at 180 degrees in the apex
    d2 = (math.cos(math.radians(120)), math.sin(math.radians(120)))
    d5 = (math.cos(math.radians(180)), math.sin(math.radians(180)))
    det = d2[0] * (-d5[1]) - d2[1] * (-d5[0])
    rx, ry = a5[0] - a2[0], a5[1] - a2[1]
    t = (rx * (-d5[1]) - ry * (-d5[0])) / det
    s = (d2[0] * ry - d2[1] * rx) / det
    return (t, s)


def _cyclic_between(a: int, b: int, x: int, m: int) -> bool:
    """Whether x lies strictly on the arc from a to b going forward mod m."""
    if a == b:
        return False
    i = (a + 1) % m
    while i != b:
        if i == x:
            return True
        i = (i + 1) % m
    return False


def _chords_cross(c1: tuple[int, int], c2: tuple[int, int], m: int) -> bool:
    a, b = c1
    c, d = c2
    return _cyclic_between(a, b, c, m) != _cyclic_between(a, b, d, m)


def _boundary_adjacent(i: int, j: int, m: int) -> bool:
    return (i - j) % m in (1, m - 1)


def chord_matchings(cycle_len: int, needing: tuple[int, ...]) -> list[tuple[tuple[int, int], ...]]:
    """All perfect matchings of `needing` by pairwise non-crossing chords
    that never join boundary-adjacent vertices of the cycle."""
    needing = tuple(sorted(needing))
    results: list[tuple[tuple[int, int], ...]] = []

    def rec(remaining: tuple[int, ...], chosen: tuple[tuple[int, int], ...]) -> None:
        if not remaining:
            results.append(chosen)
            return
        first = remaining[0]
        for partner in remaining[1:]:
            if _boundary_adjacent(first, partner, cycle_len):
                continue
            chord = (first, partner)
            if any(_chords_cross(chord, c, cycle_len) for c in chosen):
                continue
            rest = tuple(x for x in remaining if x not in chord)
            rec(rest, chosen + (chord,))

    rec(needing, ())
    return results


def leaf_island_n7_matchings() -> list[tuple[tuple[int, int], ...]]:
    """Inner-edge assignments for a 7-vertex boundary-only leaf island.

    Boundary vertices 0..6 with vertex 0 of degree 2; vertices 1..6 each
    need exactly one inner chord.  There is no legal assignment.
    """
    return chord_matchings(7, (1, 2, 3, 4, 5, 6))


def leaf_island_n7_block_reasons(vertex: int = 3) -> dict[int, str]:
    """Why each candidate partner fails for the given vertex (default A4)."""
    reasons: dict[int, str] = {}
    needing = (1, 2, 3, 4, 5, 6)
    for partner in needing:
        if partner == vertex:
            continue
        if _boundary_adjacent(vertex, partner, 7):
            reasons[partner] = "boundary-adjacent: chord would duplicate a boundary edge"
            continue
        chord = (min(vertex, partner), max(vertex, partner))
        rest = tuple(x for x in needing if x not in chord)
        completions = []

        def rec(remaining: tuple[int, ...], chosen: tuple[tuple[int, int], ...]) -> None:
            if not remaining:
                completions.append(chosen)
                return
            first = remaining[0]
            for p in remaining[1:]:
                if _boundary_adjacent(first, p, 7):
                    continue
                c = (first, p)
                if any(_chords_cross(c, x, 7) for x in chosen):
                    continue
                rec(tuple(x for x in remaining if x not in c), chosen + (c,))

        rec(rest, (chord,))
        if not completions:
            reasons[partner] = "no non-crossing completion for the remaining vertices"
    return reasons


def leaf_island_n6_assignments() -> list[tuple[frozenset[int], tuple[int, int]]]:
    """Legal placements for the n=6 island with one inner vertex.

    Boundary vertices 0..5, vertex 0 of degree 2.  The inner vertex joins
    three of vertices 1..5 and the remaining two take a chord; the chord
    may not join boundary-adjacent vertices and may not cross the inner
    star.  Exactly one assignment survives: star {2,3,4} with chord (1,5).
    """
    results = []
    pool = (1, 2, 3, 4, 5)
    for star in itertools.combinations(pool, 3):
        rest = tuple(x for x in pool if x not in star)
        chord = (rest[0], rest[1])
        if _boundary_adjacent(chord[0], chord[1], 6):
            continue
        side_a = [x for x in star if _cyclic_between(chord[0], chord[1], x, 6)]
        side_b = [x for x in star if _cyclic_between(chord[1], chord[0], x, 6)]
        if side_a and side_b:
            continue  # the star would have to cross the chord
        results.append((frozenset(star), chord))
    return results


@dataclass(frozen=True)
class N6Contradiction:
    angle_at_inner_vertex: float       # 240 degrees, from the two glued triangles
    strict_lower_bounds: tuple[float, ...]  # per remaining pentagon angle
    pentagon_angle_sum: float          # exact requirement 540
    total_exceeds_sum: bool


def leaf_island_n6_contradiction() -> N6Contradiction:
    """The pentagon angle bound that kills the forced n=6 structure.

    In the forced structure the boundary pentagon around the inner vertex
    has one 240-degree angle, two angles strictly above 60, and (by the
    unit-quadrilateral lemma applied in reverse) a remaining pair summing
    strictly above 180 - total strictly above the required 540.
    """
    bounds = (240.0, 60.0, 60.0, 180.0)
    return N6Contradiction(
        angle_at_inner_vertex=240.0,
        strict_lower_bounds=bounds,
        pentagon_angle_sum=540.0,
        total_exceeds_sum=sum(bounds) >= 540.0,
    )


@dataclass(frozen=True)
class LeafIslandReport:
    vertex_count: int
    boundary_count: int
    odd: bool
    angle_bound_ok: bool
    case: str
    passed: bool
    details: tuple[str, ...]


def leaf_island_check(island: PennyGraph) -> LeafIslandReport:
    """Replay the leaf-island size argument on a concrete island.

    Valid islands (one degree-2 attachment vertex, the rest degree 3)
    must have an odd vertex count above 7.  Candidates with at most 7
    vertices trigger the case analysis: n=5 forces side lengths 2, n=7
    admits no inner-edge matching, n=6 with an inner vertex violates the
    pentagon angle sum.
    """
    degs = island.degrees
    v = island.n
    deg2 = [i for i, d in enumerate(degs) if d == 2]
    strict = len(deg2) == 1 and all(d in (2, 3) for d in degs)
    cycle_candidate = all(d == 2 for d in degs)
    if not strict and not (cycle_candidate and v <= 7):
        raise DomainError("not a leaf-island shape")

    walk = outer_face(island)
    boundary_vertices = {u for u, _ in walk}
    n = len(boundary_vertices)
    odd = v % 2 == 1
    angle_bound_ok = 180.0 * (n - 2) >= 120.0 * (n - 1) + 60.0 - ANGLE_TOL

    details: list[str] = [
        f"degree-3 vertices: {v - len(deg2)} (must be even for a valid island)",
        f"boundary inequality 180(n-2) >= 120(n-1) + 60 with n={n}: "
        f"{'holds' if angle_bound_ok else 'fails (forces n >= 5)'}",
    ]

    if strict and v > 7:
        passed = odd and angle_bound_ok
        case = "valid" if passed else "invalid-shape"
        details.append(f"V = {v} > 7: consistent with the leaf-island lower bound")
        return LeafIslandReport(v, n, odd, angle_bound_ok, case, passed, tuple(details))

    # V <= 7: replay the impossibility cases
    if not odd:
        case = "parity-violation"
        details.append("even vertex count: the single degree-2 vertex forces odd V")
    elif not angle_bound_ok:
        case = "angle-bound"
        details.append("boundary angle sum already fails, n >= 5 is forced")
    elif n == 5:
        s1, s2 = forced_pentagon_side_lengths()
        case = "n5-forced-sides"
        details.append(
            f"forced pentagon sides adjacent to the 60-degree apex: {s1:.9f}, {s2:.9f}"
            " (length 2, not unit, so no equilateral pentagon exists)"
        )
    elif n == 7:
        matchings = leaf_island_n7_matchings()
        case = "n7-no-matching"
        details.append(
            f"legal inner-edge matchings on the 7-vertex boundary: {len(matchings)}"
        )
        for partner, reason in sorted(leaf_island_n7_block_reasons().items()):
            details.append(f"A4 to A{partner + 1}: {reason}")
    elif n == 6:
        assignments = leaf_island_n6_assignments()
        contra = leaf_island_n6_contradiction()
        case = "n6-pentagon-angle-sum"
        details.append(
            f"forced assignments (inner star, chord): {sorted((sorted(s), c) for s, c in assignments)}"
        )
        details.append(
            "pentagon angles exceed "
            + " + ".join(f"{b:g}" for b in contra.strict_lower_bounds)
            + f" = {sum(contra.strict_lower_bounds):g} >= required {contra.pentagon_angle_sum:g}"
        )
    else:
        case = "sub-minimal"
        details.append(f"boundary count n={n} below the n >= 5 bound")

    return LeafIslandReport(v, n, odd, angle_bound_ok, case, False, tuple(details))
