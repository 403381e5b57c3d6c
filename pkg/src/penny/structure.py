"""Planar structure of an embedded penny graph.

Faces are computed combinatorially by tracing the rotation system
derived from coordinates: for a directed edge (u, v), the walk continues
with the neighbor of v immediately preceding u in counterclockwise
order.  Bounded faces then come out counterclockwise (positive signed
area) and the outer face clockwise, which identifies it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError
from .geom import polygon_signed_area
from .pennygraph import Edge, PennyGraph

DirectedEdge = tuple[int, int]


@dataclass(frozen=True)
class RotationSystem:
    """Counterclockwise neighbor order around each vertex."""

    order: tuple[tuple[int, ...], ...]

    def next_face_edge(self, u: int, v: int) -> DirectedEdge:
        """Successor of directed edge (u, v) on the face to its left."""
        nbrs = self.order[v]
        i = nbrs.index(u)
        return (v, nbrs[(i - 1) % len(nbrs)])


def rotation_system(g: PennyGraph) -> RotationSystem:
    order = []
    for v in range(g.n):
        pv = g.point(v)
        withang = []
        for w in g.adjacency[v]:
            pw = g.point(w)
            ang = math.atan2(float(pw.y) - float(pv.y), float(pw.x) - float(pv.x))
            withang.append((ang, w))
        withang.sort()
        for (a1, w1), (a2, w2) in zip(withang, withang[1:]):
            if a1 == a2:
                raise DomainError(
                    f"coincident neighbor angles at vertex {v}: {w1} and {w2}"
                )
        order.append(tuple(w for _, w in withang))
    return RotationSystem(tuple(order))


def trace_faces(g: PennyGraph, rs: RotationSystem) -> list[list[DirectedEdge]]:
    """All face walks of the embedding, each as a closed directed-edge cycle."""
    remaining: set[DirectedEdge] = set()
    for i, j in g.edges:
        remaining.add((i, j))
        remaining.add((j, i))
    faces = []
    while remaining:
        start = min(remaining)
        walk = [start]
        remaining.discard(start)
        cur = rs.next_face_edge(*start)
        while cur != start:
            walk.append(cur)
            remaining.discard(cur)
            cur = rs.next_face_edge(*cur)
        faces.append(walk)
    return faces


def _walk_area(g: PennyGraph, walk: list[DirectedEdge]) -> float:
    pts = [g.point(u) for u, _ in walk]
    return polygon_signed_area(pts)


def _is_connected(g: PennyGraph) -> bool:
    if g.n == 0:
        return False
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def outer_face(g: PennyGraph, rs: RotationSystem | None = None) -> list[DirectedEdge]:
    """The closed boundary walk of the unbounded face.

    Bridges appear twice in the walk (once per direction), all other
    boundary edges once.
    """
    if not _is_connected(g):
        raise DomainError("outer face requires a connected graph")
    if rs is None:
        rs = rotation_system(g)
    faces = trace_faces(g, rs)
    if len(faces) == 1:
        return faces[0]
    areas = [_walk_area(g, f) for f in faces]
    return faces[min(range(len(faces)), key=lambda i: areas[i])]


def boundary_edges(walk: Iterable[DirectedEdge]) -> frozenset[Edge]:
    return frozenset(tuple(sorted(e)) for e in walk)  # type: ignore[misc]


def find_bridges(g: PennyGraph) -> frozenset[Edge]:
    """Cut edges, via iterative low-link traversal."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    bridges: set[Edge] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(g.adjacency[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue  # simple graph: single parent edge to skip
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.adjacency[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        bridges.add((min(parent, v), max(parent, v)))
    return frozenset(bridges)


@dataclass(frozen=True)
class BridgeClassification:
    inner: frozenset[Edge]
    outer: frozenset[Edge]


def classify_bridges(
    g: PennyGraph, rs: RotationSystem, bridges: frozenset[Edge]
) -> BridgeClassification:
    """Outer bridges lie on the outer-face walk; inner bridges are the rest."""
    walk = outer_face(g, rs)
    on_boundary = boundary_edges(walk)
    outer = frozenset(b for b in bridges if b in on_boundary)
    return BridgeClassification(inner=bridges - outer, outer=outer)


@dataclass(frozen=True)
class IslandDecomposition:
    """Components left after removing outer bridges, plus the tree T."""

    islands: tuple[frozenset[int], ...]
    isolated_vertices: tuple[int, ...]
    outer_bridges: tuple[Edge, ...]
    tree_nodes: tuple[str, ...]
    tree_edges: tuple[tuple[int, int], ...]
    leaf_islands: tuple[int, ...]  # indices into tree_nodes that are leaf islands

    @property
    def tree_degrees(self) -> tuple[int, ...]:
        deg = [0] * len(self.tree_nodes)
        for a, b in self.tree_edges:
            deg[a] += 1
            deg[b] += 1
        return tuple(deg)


def island_decomposition(g: PennyGraph) -> IslandDecomposition:
    """Remove outer bridges of a connected 3-regular penny graph and build T."""
    if not _is_connected(g):
        raise DomainError("island decomposition requires a connected graph")
    if any(d != 3 for d in g.degrees):
        raise DomainError("island decomposition requires a 3-regular graph")
    rs = rotation_system(g)
    cls = classify_bridges(g, rs, find_bridges(g))
    return _decompose(g, cls.outer, strict=True)


def _decompose(g: PennyGraph, outer: frozenset[Edge], strict: bool) -> IslandDecomposition:
    removed = set(outer)
    comp = [-1] * g.n
    comps: list[list[int]] = []
    for v in range(g.n):
        if comp[v] != -1:
            continue
        comps.append([])
        idx = len(comps) - 1
        stack = [v]
        comp[v] = idx
        while stack:
            u = stack.pop()
            comps[idx].append(u)
            for w in g.adjacency[u]:
                if (min(u, w), max(u, w)) in removed:
                    continue
                if comp[w] == -1:
                    comp[w] = idx
                    stack.append(w)

    nodes: list[str] = []
    islands: list[frozenset[int]] = []
    isolated: list[int] = []
    for members in comps:
        if len(members) == 1:
            isolated.append(members[0])
            nodes.append(f"vertex:{members[0]}")
        else:
            islands.append(frozenset(members))
            nodes.append(f"island:{min(members)}")

    tree_edges = tuple(
        (min(comp[u], comp[v]), max(comp[u], comp[v])) for u, v in sorted(removed)
    )

    if strict:
        # T must be a tree: one fewer edge than nodes, and connected
        if len(tree_edges) != len(nodes) - 1:
            raise DomainError("tree T is not acyclic: bridge/edge count mismatch")
        adj: dict[int, list[int]] = {i: [] for i in range(len(nodes))}
        for a, b in tree_edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = {0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        if len(seen) != len(nodes):
            raise DomainError("tree T is not connected")

    deg = [0] * len(nodes)
    for a, b in tree_edges:
        deg[a] += 1
        deg[b] += 1
    island_node_ids = [i for i, name in enumerate(nodes) if name.startswith("island:")]
    leaf = tuple(i for i in island_node_ids if deg[i] == 1)
    if strict:
        for v in isolated:
            assert deg[comp[v]] == 3, "isolated vertex must have tree degree 3"

    return IslandDecomposition(
        islands=tuple(islands),
        isolated_vertices=tuple(isolated),
        outer_bridges=tuple(sorted(outer)),
        tree_nodes=tuple(nodes),
        tree_edges=tree_edges,
        leaf_islands=leaf,
    )


def decompose_lenient(g: PennyGraph) -> IslandDecomposition:
    """Island decomposition without the 3-regularity requirement.

    Used by analysis tooling on fragments (e.g. a leaf island with its
    bridge stub attached); tree checks and isolated-vertex degrees are
    not enforced.
    """
    if not _is_connected(g):
        raise DomainError("island decomposition requires a connected graph")
    rs = rotation_system(g)
    cls = classify_bridges(g, rs, find_bridges(g))
    return _decompose(g, cls.outer, strict=False)


def induced_subgraph(g: PennyGraph, vertices: frozenset[int]) -> PennyGraph:
    """The penny graph induced on a vertex subset (e.g. one island).

    Rebuilds from the sub-point-set so the penny invariants are
    re-validated on the fragment.
    """
    from .pennygraph import build_penny_graph  # local import to avoid cycle

    order = sorted(vertices)
    return build_penny_graph(g.points.subset(order))


def euler_characteristic(g: PennyGraph) -> int:
    """V - E + F from the traced faces; equals 2 for connected embeddings."""
    if not _is_connected(g):
        raise DomainError("Euler characteristic check requires connectivity")
    rs = rotation_system(g)
    f = len(trace_faces(g, rs))
    return g.n - len(g.edges) + f
