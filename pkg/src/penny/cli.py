"""Command-line interface: construct | validate | analyze | search | render.

Exit codes are a stable contract: 0 success, 1 domain failure (invalid
penny configuration), 2 input error (unparseable file, unknown name,
bad flags), 3 unexpected finding (a sub-16 embedding succeeded).
Reports are deterministic, key-sorted, and end with a single verdict
line.
"""

from __future__ import annotations

import os
import sys
from dataclasses import replace

import click

from .constructions import CONSTRUCTIONS
from .errors import DomainError, InputError
from .exactnum import QuadNum
from .files import read_pointset, write_pointset
from .geom import NUMERIC, PointSet
from .ledger import leaf_island_check, theorem1_ledger
from .pennygraph import (
    PennyGraph,
    build_penny_graph,
    closest_neighbor_counts,
    is_k_regular,
)
from .render import render_svg
from .search import SearchConfig, minimality_report
from .structure import (
    classify_bridges,
    decompose_lenient,
    find_bridges,
    induced_subgraph,
    island_decomposition,
    outer_face,
    rotation_system,
)

DEFAULT_SEED = 42


def _emit(entries: dict[str, str], verdict: str) -> None:
    for key in sorted(entries):
        click.echo(f"{key}: {entries[key]}")
    click.echo(f"verdict: {verdict}")


def _d_squared_text(g: PennyGraph) -> str:
    if isinstance(g.d_squared, QuadNum):
        return g.d_squared.to_token()
    return repr(g.d_squared)


@click.group()
def main() -> None:
    """Penny graph toolkit."""


@main.command()
@click.argument("name")
@click.argument("out_path")
def construct(name: str, out_path: str) -> None:
    """Write a named fixture as a point-set file."""
    factory = CONSTRUCTIONS.get(name)
    if factory is None:
        click.echo(f"unknown construction {name!r}; choices: {sorted(CONSTRUCTIONS)}", err=True)
        sys.exit(2)
    try:
        write_pointset(factory().points, out_path)
    except InputError as exc:
        click.echo(str(exc), err=True)
        sys.exit(2)


@main.command()
@click.argument("in_path")
@click.option("--tol", type=float, default=None, help="override numeric-mode tolerance")
@click.option("--expect-regular", "expect_regular", type=int, default=None)
def validate(in_path: str, tol: float | None, expect_regular: int | None) -> None:
    """Validate the penny property (and optionally K-regularity)."""
    try:
        ps = read_pointset(in_path)
    except InputError as exc:
        click.echo(str(exc), err=True)
        sys.exit(2)
    if tol is not None:
        if ps.mode != NUMERIC:
            click.echo("--tol applies to numeric-mode files only", err=True)
            sys.exit(2)
        ps = PointSet(ps.points, ps.mode, tol)

    entries: dict[str, str] = {"count": str(len(ps)), "mode": ps.mode}
    if ps.mode == NUMERIC:
        entries["tolerance"] = repr(ps.tolerance)
    try:
        g = build_penny_graph(ps)
    except DomainError as exc:
        entries["violation.000"] = str(exc)
        _emit(entries, "penny-invalid")
        sys.exit(1)

    entries["d-squared"] = _d_squared_text(g)
    entries["edge-count"] = str(len(g.edges))
    entries["degree-min"] = str(min(g.degrees))
    entries["degree-max"] = str(max(g.degrees))

    if expect_regular is None:
        _emit(entries, "penny-valid")
        return

    ok = is_k_regular(g, expect_regular)
    entries["regular"] = f"expected {expect_regular}: {'pass' if ok else 'fail'}"
    if not ok:
        counts = closest_neighbor_counts(ps)
        num = 0
        for i, c in enumerate(counts):
            if c > expect_regular:
                entries[f"violation.{num:03d}"] = (
                    f"vertex {i} has {c} closest neighbors (> {expect_regular})"
                )
                num += 1
        for i, d in enumerate(g.degrees):
            if d != expect_regular and counts[i] <= expect_regular:
                entries[f"violation.{num:03d}"] = (
                    f"vertex {i} has degree {d} (!= {expect_regular})"
                )
                num += 1
        _emit(entries, "penny-invalid")
        sys.exit(1)
    _emit(entries, "penny-valid")


def _analyze_island(entries: dict[str, str], prefix: str, island: PennyGraph) -> None:
    report = leaf_island_check(island)
    entries[f"{prefix}.vertices"] = str(report.vertex_count)
    entries[f"{prefix}.boundary"] = str(report.boundary_count)
    entries[f"{prefix}.odd"] = "yes" if report.odd else "no"
    entries[f"{prefix}.case"] = report.case
    entries[f"{prefix}.check"] = (
        f"V={report.vertex_count}, odd, >7: pass" if report.passed else "fail"
    )


@main.command()
@click.argument("in_path")
def analyze(in_path: str) -> None:
    """Structure and ledger analysis of a penny-valid input."""
    try:
        ps = read_pointset(in_path)
    except InputError as exc:
        click.echo(str(exc), err=True)
        sys.exit(2)
    entries: dict[str, str] = {"count": str(len(ps)), "mode": ps.mode}
    try:
        g = build_penny_graph(ps)
        entries["d-squared"] = _d_squared_text(g)
        entries["edge-count"] = str(len(g.edges))
        rs = rotation_system(g)
        bridges = find_bridges(g)
        cls = classify_bridges(g, rs, bridges)
        entries["bridges.inner"] = str(sorted(cls.inner)) if cls.inner else "none"
        entries["bridges.outer"] = str(sorted(cls.outer)) if cls.outer else "none"

        degrees = g.degrees
        cubic = all(d == 3 for d in degrees)
        if cubic:
            dec = island_decomposition(g)
            entries["islands"] = str(len(dec.islands))
            entries["isolated-vertices"] = str(len(dec.isolated_vertices))
            entries["tree.nodes"] = str(len(dec.tree_nodes))
            entries["tree.edges"] = str(len(dec.tree_edges))
            if not dec.outer_bridges:
                rep = theorem1_ledger(g)
                entries["boundary.n"] = str(rep.n)
                entries["triangle-edges.k"] = str(rep.k)
                entries["rhombus-edges.r"] = str(rep.r)
                free = [
                    e for e in rep.ledger.per_edge if e.kind == "free"
                ]
                entries["free-contributions"] = ", ".join(
                    f"{e.contribution_degrees:.6f}" for e in free
                ) or "none"
                entries["angle-sum"] = (
                    f"{rep.ledger.total_degrees:.6f} (expected {180 * (rep.n - 2)})"
                )
                entries["eq1"] = (
                    f"{rep.eq1.lhs_degrees:.1f} >= {rep.eq1.rhs_degrees:.1f}: "
                    f"{'holds' if rep.eq1.holds else 'fails'}"
                )
                entries["k-lower-bound"] = (
                    "k >= 6 holds" if rep.eq1.k_lower_bound_holds else "k >= 6 fails"
                )
                entries["sub-14-obstruction"] = rep.sub14_obstruction
                entries["bounds"] = (
                    "consistent" if rep.bounds_consistent else "inconsistent"
                )
            else:
                for idx, node in enumerate(dec.leaf_islands):
                    island = induced_subgraph(g, dec.islands[_island_index(dec, node)])
                    _analyze_island(entries, f"leaf-island.{idx:02d}", island)
        else:
            deg2 = [i for i, d in enumerate(degrees) if d == 2]
            if len(deg2) == 1 and all(d in (2, 3) for d in degrees):
                _analyze_island(entries, "leaf-island.00", g)
            else:
                dec = decompose_lenient(g)
                entries["islands"] = str(len(dec.islands))
                entries["isolated-vertices"] = str(len(dec.isolated_vertices))
                entries["bridges.outer"] = (
                    str(sorted(dec.outer_bridges)) if dec.outer_bridges else "none"
                )
                for idx, node in enumerate(dec.leaf_islands):
                    island = induced_subgraph(g, dec.islands[_island_index(dec, node)])
                    _analyze_island(entries, f"leaf-island.{idx:02d}", island)
    except DomainError as exc:
        entries["violation.000"] = str(exc)
        _emit(entries, "analysis-failed")
        sys.exit(1)
    _emit(entries, "analysis-complete")


def _island_index(dec, node: int) -> int:
    """Index into dec.islands for a tree node id naming an island."""
    island_nodes = [i for i, name in enumerate(dec.tree_nodes) if name.startswith("island:")]
    return island_nodes.index(node)


@main.command()
@click.option("--max-n", "max_n", type=int, default=14, show_default=True)
@click.option("--restarts", type=int, default=200, show_default=True)
@click.option("--seed", type=int, default=None, help="default: $PENNY_SEED or 42")
@click.option("--out", "out_path", default="penny-search-report.txt", show_default=True)
def search(max_n: int, restarts: int, seed: int | None, out_path: str) -> None:
    """Sweep all planar cubic graphs up to --max-n for penny embeddings."""
    if seed is None:
        env = os.environ.get("PENNY_SEED")
        try:
            seed = int(env) if env is not None else DEFAULT_SEED
        except ValueError:
            click.echo(f"bad PENNY_SEED value {env!r}", err=True)
            sys.exit(2)
    if max_n > 14 or max_n < 4:
        click.echo("--max-n must lie in 4..14", err=True)
        sys.exit(2)
    cfg = SearchConfig(restarts=restarts, seed=seed)
    report = minimality_report(max_n, cfg)
    text = report.to_text()
    try:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(text)
    except OSError as exc:
        click.echo(f"cannot write {out_path}: {exc}", err=True)
        sys.exit(2)
    click.echo(f"report: {out_path}")
    click.echo(f"verdict: {report.verdict}")
    if report.unexpected_successes:
        sys.exit(3)


@main.command()
@click.argument("in_path")
@click.argument("out_svg")
@click.option("--pennies", is_flag=True)
@click.option("--highlight-violations", "highlight_violations", is_flag=True)
@click.option("--boundary", is_flag=True)
def render(
    in_path: str, out_svg: str, pennies: bool, highlight_violations: bool, boundary: bool
) -> None:
    """Render a point-set file to SVG."""
    try:
        ps = read_pointset(in_path)
    except InputError as exc:
        click.echo(str(exc), err=True)
        sys.exit(2)
    try:
        svg = render_svg(
            ps,
            pennies=pennies,
            highlight_violations=highlight_violations,
            boundary=boundary,
        )
    except DomainError as exc:
        click.echo(str(exc), err=True)
        sys.exit(1)
    try:
        with open(out_svg, "w", encoding="ascii") as fh:
            fh.write(svg)
    except OSError as exc:
        click.echo(f"cannot write {out_svg}: {exc}", err=True)
        sys.exit(2)


if __name__ == "__main__":
    main()
