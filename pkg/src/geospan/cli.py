"""Command-line front end: generate, build, measure, verify, bench, export-svg.

Exit codes: 0 success, 1 failed verification / invariant violation, 2 usage
error (unknown flags, malformed files, invalid parameters).
"""

from __future__ import annotations

import argparse
import csv
import sys
import time

from .bounded_spread import bounded_spread_spanner
from .core import InputError, load_points, save_points
from .generators import (
    GridSquaresSpec,
    gen_circle,
    gen_convex_rect,
    gen_grid_squares,
    gen_multi_circle,
    gen_random,
)
from .geograph import dilation, load_graph, save_graph
from .highd import sparse_spanner_highd
from .spanner2d import sparse_spanner_2d
from .verification import SUITES, run_suite

_ALGOS = ("sparse2d", "highd", "spread")


def _build_graph(points, algo: str, k: int, t: float):
    if algo == "sparse2d":
        return sparse_spanner_2d(points, k)
    if algo == "highd":
        return sparse_spanner_highd(points, k, t).graph
    return bounded_spread_spanner(points, k, t)


def _cmd_generate(args) -> int:
    if args.shape == "circle":
        ps = gen_circle(args.n)
    elif args.shape == "multicircle":
        ps = gen_multi_circle(args.n, args.k)
    elif args.shape == "convexrect":
        ps = gen_convex_rect(args.n)
    elif args.shape == "gridsquares":
        spec = GridSquaresSpec(r=args.r, m=args.m, n=args.n, dim=args.dim)
        ps = gen_grid_squares(spec)
    else:
        ps = gen_random(args.n, args.dim, args.seed)
    save_points(ps, args.out)
    return 0


def _cmd_build(args) -> int:
    points = load_points(args.points)
    graph = _build_graph(points, args.algo, args.k, args.t)
    save_graph(graph, args.out)
    return 0


def _cmd_measure(args) -> int:
    points = load_points(args.points)
    graph = load_graph(args.graph, points)
    report = dilation(graph, workers=args.workers)
    if report.connected:
        i, j = report.argmax_pair
        print(f"dilation={report.dilation!r} pair=({i},{j}) edges={len(graph.edges)}")
    else:
        print(f"dilation=inf pair=none edges={len(graph.edges)}")
    return 0


def _cmd_verify(args) -> int:
    rows = run_suite(args.suite, seed=args.seed)
    name_w = max(len(r.name) for r in rows)
    par_w = max(len(r.params) for r in rows)
    for r in rows:
        status = "PASS" if r.passed else "FAIL"
        print(
            f"{r.name:<{name_w}} {r.params:<{par_w}}"
            f" bound={r.bound} measured={r.measured} {status}"
        )
    failed = sum(1 for r in rows if not r.passed)
    print(f"{len(rows) - failed}/{len(rows)} checks passed")
    return 1 if failed else 0


def _cmd_bench(args) -> int:
    ns = [int(v) for v in args.ns.split(",")]
    ks = [int(v) for v in args.ks.split(",")]
    algos = args.algos.split(",")
    for algo in algos:
        if algo not in _ALGOS:
            raise InputError(f"unknown algorithm {algo!r}")

    rows = []
    for n in ns:
        points = gen_random(n, args.dim, args.seed)
        for k in ks:
            if not 0 <= k < n:
                continue
            for algo in algos:
                if algo == "sparse2d" and args.dim != 2:
                    continue
                start = time.perf_counter()
                graph = _build_graph(points, algo, k, args.t)
                report = dilation(graph, workers=args.workers)
                seconds = time.perf_counter() - start
                rows.append(
                    {
                        "n": n,
                        "k": k,
                        "algo": algo,
                        "edges": len(graph.edges),
                        "max_degree": graph.max_degree(),
                        "dilation": repr(report.dilation),
                        "seconds": f"{seconds:.6f}",
                    }
                )
    header = ["n", "k", "algo", "edges", "max_degree", "dilation", "seconds"]
    with open(args.out, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=header)
        writer.writeheader()
        writer.writerows(rows)
    if not args.no_plot:
        from .plotting import save_bench_figure

        stem = args.out[:-4] if args.out.endswith(".csv") else args.out
        save_bench_figure(rows, stem + ".png")
    return 0


def _cmd_export_svg(args) -> int:
    points = load_points(args.points)
    if points.dim != 2:
        raise InputError("export-svg requires 2D points")
    graph = load_graph(args.graph, points)
    report = dilation(graph)
    if report.connected:
        title = f"dilation={report.dilation:.4f} pair={report.argmax_pair}"
    else:
        title = "disconnected"
    from .plotting import save_graph_figure

    save_graph_figure(
        points, graph, args.out, highlight=report.argmax_pair, title=title
    )
    return 0


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="geospan", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a point-set file")
    gsub = gen.add_subparsers(dest="shape", required=True)
    for shape in ("circle", "multicircle", "convexrect", "gridsquares", "random"):
        p = gsub.add_parser(shape)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--out", required=True)
        if shape == "multicircle":
            p.add_argument("--k", type=int, required=True)
        if shape == "gridsquares":
            p.add_argument("--r", type=int, required=True)
            p.add_argument("--m", type=int, required=True)
            p.add_argument("--dim", type=int, default=2)
        if shape == "random":
            p.add_argument("--dim", type=int, default=2)
            p.add_argument("--seed", type=int, default=0)

    build = sub.add_parser("build", help="build a spanner over a point-set file")
    build.add_argument("--points", required=True)
    build.add_argument("--algo", choices=_ALGOS, required=True)
    build.add_argument("--k", type=int, required=True)
    build.add_argument("--t", type=float, default=2.0, help="stretch for highd/spread")
    build.add_argument("--out", required=True)

    measure = sub.add_parser("measure", help="print dilation of a graph file")
    measure.add_argument("--points", required=True)
    measure.add_argument("--graph", required=True)
    measure.add_argument("--workers", type=int, default=1)

    verify = sub.add_parser("verify", help="run named bound/lemma checks")
    verify.add_argument("--suite", choices=SUITES, required=True)
    verify.add_argument("--seed", type=int, default=0)

    bench = sub.add_parser("bench", help="sweep n,k and write CSV (+ figure)")
    bench.add_argument("--out", required=True)
    bench.add_argument("--ns", default="32,64")
    bench.add_argument("--ks", default="0,1,3,7,15")
    bench.add_argument("--algos", default="sparse2d,highd,spread")
    bench.add_argument("--dim", type=int, default=2)
    bench.add_argument("--t", type=float, default=2.0)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--workers", type=int, default=1)
    bench.add_argument("--no-plot", action="store_true")

    svg = sub.add_parser("export-svg", help="render a 2D graph to SVG")
    svg.add_argument("--points", required=True)
    svg.add_argument("--graph", required=True)
    svg.add_argument("--out", required=True)

    return top


_COMMANDS = {
    "generate": _cmd_generate,
    "build": _cmd_build,
    "measure": _cmd_measure,
    "verify": _cmd_verify,
    "bench": _cmd_bench,
    "export-svg": _cmd_export_svg,
}


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InputError as exc:
        print(f"geospan: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"geospan: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
