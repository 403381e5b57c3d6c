#!/usr/bin/env python3
"""Run the minimality sweep with progress output and write the full report.

Example:
    python scripts/run_minimality_sweep.py --max-n 14 --restarts 200 --seed 42
"""

import argparse
import sys
import time

from penny.search import (
    SearchConfig,
    SearchReport,
    GraphAttempt,
    control_sixteen,
    embed_attempt,
    enumerate_cubic,
    minimality_report,
    planar_filter,
)


def run(max_n: int, cfg: SearchConfig, out_path: str) -> int:
    t0 = time.perf_counter()
    sizes = []
    attempts = []
    for n in range(4, max_n + 1, 2):
        t = time.perf_counter()
        graphs = enumerate_cubic(n)
        planar = planar_filter(graphs)
        print(
            f"n={n}: {len(graphs)} cubic classes, {len(planar)} planar "
            f"({time.perf_counter() - t:.1f}s to enumerate)"
        )
        from penny.search import SizeSummary, _revalidate

        sizes.append(SizeSummary(n=n, cubic_classes=len(graphs), planar_classes=len(planar)))
        for i, g in enumerate(planar):
            result = embed_attempt(g, cfg)
            attempts.append(GraphAttempt(g, result, _revalidate(result)))
            status = "SUCCESS!?" if result.success else "fail"
            print(f"  [{i + 1}/{len(planar)}] residual={result.best_residual:.3e} {status}")

    print("running 16-vertex positive control ...")
    cg = control_sixteen()
    from penny.search import _revalidate

    control_result = embed_attempt(cg, cfg)
    control = GraphAttempt(cg, control_result, _revalidate(control_result), is_control=True)
    print(
        f"control: residual={control_result.best_residual:.3e} "
        f"success={control_result.success} revalidated={control.revalidated}"
    )

    report = SearchReport(
        n_max=max_n, config=cfg, sizes=tuple(sizes), attempts=tuple(attempts), control=control
    )
    with open(out_path, "w", encoding="ascii") as fh:
        fh.write(report.to_text())
    print(f"\nwrote {out_path} in {time.perf_counter() - t0:.1f}s")
    print(f"verdict: {report.verdict}")
    return 3 if report.unexpected_successes else 0


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=14)
    parser.add_argument("--restarts", type=int, default=200)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--out", default="penny-search-report.txt")
    args = parser.parse_args()
    cfg = SearchConfig(restarts=args.restarts, seed=args.seed)
    sys.exit(run(args.max_n, cfg, args.out))


if __name__ == "__main__":
    main()
