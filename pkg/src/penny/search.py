"""Numerical-evidence harness for penny-graph minimality.

Enumerates connected cubic graphs up to isomorphism (augmentation with
canonical-form deduplication), keeps the planar ones, and attempts a
penny embedding for each by multi-start penalty descent: unit-length
targets on edges, a one-sided hinge keeping non-edges beyond 1 + margin.
Failure of every candidate below 16 vertices is numerical evidence for
minimality, not a proof, and the report says so.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import networkx as nx
import numpy as np
from scipy.optimize import minimize

from .errors import DomainError, InputError
from .geom import PointSet
from .pennygraph import Edge, build_penny_graph, is_k_regular

#: an embedding attempt succeeds below this objective value
SUCCESS_RESIDUAL = 1e-18

#: unit edges must be this close to length 1 for success
UNIT_EDGE_TOL = 1e-9


# -- canonical labeling -------------------------------------------------------


def _refine(n: int, adj: Sequence[Sequence[int]], colors: tuple[int, ...]) -> tuple[int, ...]:
    while True:
        sig = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(n)]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = tuple(rank[s] for s in sig)
        if new == colors:
            return new
        colors = new


def _distance_colors(n: int, adj: Sequence[Sequence[int]]) -> tuple[int, ...]:
    profiles = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        queue = [s]
        for v in queue:
            for w in adj[v]:
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        profiles.append(tuple(sorted(dist)))
    rank = {p: i for i, p in enumerate(sorted(set(profiles)))}
    return tuple(rank[p] for p in profiles)


def canonical_form(n: int, edges: Iterable[Edge]) -> str:
    """Canonical adjacency encoding by iterated refinement with exhaustive
    tie-breaking: individualize every vertex of the first ambiguous color
    class, recurse, and keep the minimal adjacency bitstring."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    best: list[int | None] = [None]

    def bitstring(colors: tuple[int, ...]) -> int:
        perm = sorted(range(n), key=lambda v: colors[v])
        pos = [0] * n
        for i, v in enumerate(perm):
            pos[v] = i
        bits = 0
        for v in range(n):
            for w in adj[v]:
                if v < w:
                    i, j = pos[v], pos[w]
                    if i > j:
                        i, j = j, i
                    bits |= 1 << (i * n + j)
        return bits

    def search(colors: tuple[int, ...]) -> None:
        colors = _refine(n, adj, colors)
        groups: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            groups.setdefault(c, []).append(v)
        target = None
        for c in sorted(groups):
            if len(groups[c]) > 1:
                target = groups[c]
                break
        if target is None:
            s = bitstring(colors)
            if best[0] is None or s < best[0]:
                best[0] = s
            return
        for v in target:
            search(tuple(-1 if u == v else c for u, c in enumerate(colors)))

    search(_distance_colors(n, adj))
    assert best[0] is not None
    return f"{n}:{best[0]:x}"


# -- enumeration --------------------------------------------------------------


@dataclass(frozen=True)
class AbstractGraph:
    """A connected cubic graph up to isomorphism."""

    n: int
    adjacency: frozenset[Edge]
    canonical_form: str

    @property
    def edges(self) -> list[Edge]:
        return sorted(self.adjacency)


def enumerate_cubic(n: int) -> list[AbstractGraph]:
    """All connected 3-regular simple graphs on n vertices up to isomorphism.

    Vertices are introduced in first-touch order and the lowest deficient
    vertex is completed at each step; interchangeable partners (equal
    current adjacency) are taken as class prefixes, which prunes most of
    the label symmetry.  Residual duplicates fall to canonical-form
    deduplication.
    """
    if n % 2 != 0:
        raise InputError("cubic graphs need an even vertex count")
    if not 4 <= n <= 14:
        raise InputError("enumeration supports 4 <= n <= 14")

    adj: list[set[int]] = [set() for _ in range(n)]
    deg = [0] * n
    found: dict[str, frozenset[Edge]] = {}

    def rec(used: int) -> None:
        u = -1
        for v in range(used):
            if deg[v] < 3:
                u = v
                break
        if u == -1:
            if used == n:
                edges = frozenset(
                    (a, b) for a in range(n) for b in adj[a] if a < b
                )
                key = canonical_form(n, edges)
                found.setdefault(key, edges)
            return  # unfilled fresh vertices would start a new component

        need = 3 - deg[u]
        classes: dict[tuple, list[int]] = {}
        for v in range(used):
            if v != u and deg[v] < 3 and v not in adj[u]:
                classes.setdefault((deg[v], tuple(sorted(adj[v]))), []).append(v)
        class_lists = list(classes.values())
        fresh_avail = n - used

        def attach(partners: list[int], fresh_count: int) -> None:
            chosen = partners + list(range(used, used + fresh_count))
            for v in chosen:
                adj[u].add(v)
                adj[v].add(u)
                deg[u] += 1
                deg[v] += 1
            rec(used + fresh_count)
            for v in chosen:
                adj[u].discard(v)
                adj[v].discard(u)
                deg[u] -= 1
                deg[v] -= 1

        def choose(ci: int, left: int, picked: list[int]) -> None:
            if left == 0:
                attach(picked, 0)
                return
            if ci == len(class_lists):
                if left <= fresh_avail:
                    attach(picked, left)
                return
            group = class_lists[ci]
            for take in range(min(len(group), left) + 1):
                choose(ci + 1, left - take, picked + group[:take])

        choose(0, need, [])

    rec(1)
    graphs = [
        AbstractGraph(n=n, adjacency=edges, canonical_form=key)
        for key, edges in found.items()
    ]
    graphs.sort(key=lambda g: g.canonical_form)
    return graphs


def planar_filter(graphs: Iterable[AbstractGraph]) -> list[AbstractGraph]:
    """Keep exactly the planar graphs (combinatorial test)."""
    out = []
    for g in graphs:
        G = nx.Graph()
        G.add_nodes_from(range(g.n))
        G.add_edges_from(g.adjacency)
        if nx.check_planarity(G, counterexample=False)[0]:
            out.append(g)
    return out


# -- embedding attempts -------------------------------------------------------


@dataclass(frozen=True)
class SearchConfig:
    restarts: int = 200
    max_iters: int = 5000
    seed: int = 42
    separation_margin: float = 1e-3
    polish_top: int = 8


@dataclass(frozen=True)
class EmbedResult:
    best_residual: float
    coordinates: PointSet
    separation_ok: bool
    unit_ok: bool
    restarts_used: int
    seed: int

    @property
    def success(self) -> bool:
        return (
            self.best_residual < SUCCESS_RESIDUAL and self.unit_ok and self.separation_ok
        )


def _pair_terms(n: int, edges: Iterable[Edge]) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    iu, ju = np.triu_indices(n, k=1)
    eset = {(min(i, j), max(i, j)) for i, j in edges}
    is_edge = np.array([(int(i), int(j)) in eset for i, j in zip(iu, ju)])
    incidence = np.zeros((len(iu), n))
    incidence[np.arange(len(iu)), iu] = 1.0
    incidence[np.arange(len(iu)), ju] = -1.0
    return iu, ju, is_edge, incidence


def _batched_objective(n: int, edges: Sequence[Edge], margin: float):
    iu, ju, is_edge, incidence = _pair_terms(n, edges)
    non_edge = ~is_edge

    def fg(X: np.ndarray, want_grad: bool = True):
        diffp = X[:, iu, :] - X[:, ju, :]
        dist = np.sqrt(np.einsum("rpk,rpk->rp", diffp, diffp))
        de = dist[:, is_edge]
        fe = ((de - 1.0) ** 2).sum(axis=1)
        h = (1.0 + margin) - dist[:, non_edge]
        np.maximum(h, 0.0, out=h)
        f = fe + (h * h).sum(axis=1)
        if not want_grad:
            return f, None
        safe = np.maximum(dist, 1e-300)
        w = np.empty_like(dist)
        w[:, is_edge] = 2.0 * (de - 1.0) / safe[:, is_edge]
        w[:, non_edge] = -2.0 * h / safe[:, non_edge]
        weighted = w[:, :, None] * diffp
        grad = np.matmul(weighted.transpose(0, 2, 1), incidence).transpose(0, 2, 1)
        return f, np.ascontiguousarray(grad)

    return fg


def objective_and_gradient(
    x: np.ndarray, n: int, edges: Sequence[Edge], margin: float
) -> tuple[float, np.ndarray]:
    """Objective value and analytic gradient at a flat (2n,) layout vector."""
    fg = _batched_objective(n, edges, margin)
    f, g = fg(np.asarray(x, dtype=float).reshape(1, n, 2))
    assert g is not None
    return float(f[0]), g.reshape(-1)


def _is_connected_cubic(g: AbstractGraph) -> bool:
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for i, j in g.adjacency:
        adj[i].append(j)
        adj[j].append(i)
    if any(len(a) != 3 for a in adj):
        return False
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def embed_attempt(g: AbstractGraph, cfg: SearchConfig = SearchConfig()) -> EmbedResult:
    """Multi-start penalty descent toward a penny embedding of g.

    Deterministic for fixed (graph, cfg): restarts are evaluated in a
    batch and aggregated by (residual, restart index); the best few are
    polished with a quasi-Newton pass to resolve the 1e-18 success
    threshold.  Failure is a result, not an error.
    """
    if not _is_connected_cubic(g):
        raise DomainError("embed_attempt expects a connected cubic graph")
    G = nx.Graph(list(g.adjacency))
    if not nx.check_planarity(G, counterexample=False)[0]:
        raise DomainError("embed_attempt expects a planar graph")

    edges = g.edges
    n = g.n
    margin = cfg.separation_margin
    fg = _batched_objective(n, edges, margin)
    rng = np.random.default_rng(cfg.seed)
    side = 1.2 * np.sqrt(n)
    X = rng.uniform(0.0, side, size=(cfg.restarts, n, 2))
    alpha = np.full(cfg.restarts, 0.05)
    fcur, grad = fg(X)
    best_seen = float(fcur.min())
    stall = 0
    for it in range(cfg.max_iters):
        trial = X - alpha[:, None, None] * grad
        ftrial, gtrial = fg(trial)
        accept = ftrial <= fcur
        X[accept] = trial[accept]
        fcur[accept] = ftrial[accept]
        grad[accept] = gtrial[accept]
        alpha[accept] *= 1.3
        alpha[~accept] *= 0.5
        # deterministic stagnation cutoff: two 50-iteration windows without
        # relative progress of the best restart
        if it % 50 == 49:
            m = float(fcur.min())
            if m > best_seen * (1.0 - 1e-6) - 1e-30:
                stall += 1
                if stall >= 2:
                    break
            else:
                stall = 0
            best_seen = min(best_seen, m)
        if alpha.max() < 1e-18:
            break

    def flat_obj(x: np.ndarray) -> tuple[float, np.ndarray]:
        f, gr = fg(x.reshape(1, n, 2))
        assert gr is not None
        return float(f[0]), gr.reshape(-1)

    order = np.lexsort((np.arange(cfg.restarts), fcur))
    candidates: list[tuple[float, int, np.ndarray]] = []
    for idx in order[: cfg.polish_top]:
        res = minimize(
            flat_obj,
            X[idx].reshape(-1),
            jac=True,
            method="L-BFGS-B",
            options={"maxiter": 2000, "ftol": 1e-22, "gtol": 1e-14},
        )
        candidates.append((float(res.fun), int(idx), res.x.reshape(n, 2)))
    candidates.sort(key=lambda t: (t[0], t[1]))
    best_f, _, best_x = candidates[0]

    diff = best_x[:, None, :] - best_x[None, :, :]
    dist = np.sqrt(np.einsum("ijk,ijk->ij", diff, diff))
    eset = {(min(i, j), max(i, j)) for i, j in edges}
    unit_ok = all(abs(dist[i, j] - 1.0) <= UNIT_EDGE_TOL for i, j in eset)
    separation_ok = True
    for i, j in itertools.combinations(range(n), 2):
        if (i, j) in eset:
            continue
        if dist[i, j] <= 1.0 + margin / 2.0:
            separation_ok = False
            break
    coords = PointSet.numeric([(float(x), float(y)) for x, y in best_x])
    return EmbedResult(
        best_residual=best_f,
        coordinates=coords,
        separation_ok=separation_ok,
        unit_ok=unit_ok,
        restarts_used=cfg.restarts,
        seed=cfg.seed,
    )


# -- sweep report -------------------------------------------------------------


CONTROL_NOTE = "control"


@dataclass(frozen=True)
class GraphAttempt:
    graph: AbstractGraph
    result: EmbedResult
    revalidated: bool
    is_control: bool = False


@dataclass(frozen=True)
class SizeSummary:
    n: int
    cubic_classes: int
    planar_classes: int


@dataclass(frozen=True)
class SearchReport:
    n_max: int
    config: SearchConfig
    sizes: tuple[SizeSummary, ...]
    attempts: tuple[GraphAttempt, ...]
    control: GraphAttempt | None

    @property
    def unexpected_successes(self) -> list[GraphAttempt]:
        return [a for a in self.attempts if a.result.success and not a.is_control]

    @property
    def verdict(self) -> str:
        return (
            "unexpected-embedding-found"
            if self.unexpected_successes
            else "no-embedding-found"
        )

    def to_text(self) -> str:
        lines = [
            "penny minimality search report",
            f"config max-iters: {self.config.max_iters}",
            f"config n-max: {self.n_max}",
            f"config polish-top: {self.config.polish_top}",
            f"config restarts: {self.config.restarts}",
            f"config seed: {self.config.seed}",
            f"config separation-margin: {self.config.separation_margin!r}",
            "note: embedding failure below 16 vertices is numerical evidence for"
            " minimality, not a proof.",
        ]
        for s in self.sizes:
            lines.append(
                f"n={s.n}: cubic-classes={s.cubic_classes} planar-classes={s.planar_classes}"
            )
        for a in self.attempts:
            lines.append(_attempt_line(a))
        if self.control is not None:
            lines.append(_attempt_line(self.control))
        lines.append(f"successes-below-16: {len(self.unexpected_successes)}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"


def _attempt_line(a: GraphAttempt) -> str:
    r = a.result
    tag = " [control]" if a.is_control else ""
    return (
        f"graph {a.graph.canonical_form}{tag}: residual={r.best_residual:.6e}"
        f" unit={'yes' if r.unit_ok else 'no'}"
        f" separation={'yes' if r.separation_ok else 'no'}"
        f" success={'yes' if r.success else 'no'}"
        f" revalidated={'yes' if a.revalidated else 'no'}"
    )


def _revalidate(result: EmbedResult) -> bool:
    if not result.success:
        return False
    try:
        graph = build_penny_graph(result.coordinates)
    except DomainError:
        return False
    return is_k_regular(graph, 3)


def control_sixteen() -> AbstractGraph:
    """The 16-vertex control adjacency, from the exact fixture."""
    from .constructions import construct_16

    g = build_penny_graph(construct_16().points)
    edges = frozenset(g.edges)
    return AbstractGraph(n=16, adjacency=edges, canonical_form=canonical_form(16, edges))


def minimality_report(
    n_max: int, cfg: SearchConfig = SearchConfig(), include_control: bool = True
) -> SearchReport:
    """Sweep every planar connected cubic graph with n <= n_max.

    The 16-vertex fixture adjacency is appended as a positive control;
    its success is expected and flagged as such.
    """
    if n_max > 14:
        raise InputError("negative sweep is limited to n <= 14")
    sizes = []
    attempts = []
    for n in range(4, n_max + 1, 2):
        graphs = enumerate_cubic(n)
        planar = planar_filter(graphs)
        sizes.append(SizeSummary(n=n, cubic_classes=len(graphs), planar_classes=len(planar)))
        for g in planar:
            result = embed_attempt(g, cfg)
            attempts.append(
                GraphAttempt(graph=g, result=result, revalidated=_revalidate(result))
            )
    control = None
    if include_control:
        cg = control_sixteen()
        result = embed_attempt(cg, cfg)
        control = GraphAttempt(
            graph=cg, result=result, revalidated=_revalidate(result), is_control=True
        )
    return SearchReport(
        n_max=n_max,
        config=cfg,
        sizes=tuple(sizes),
        attempts=tuple(attempts),
        control=control,
    )
