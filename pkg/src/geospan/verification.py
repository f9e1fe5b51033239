"""Named numeric checks behind `geospan verify`.

Each check compares a measured quantity against an analytic bound or a frozen
calibration constant and yields printable rows. The heavy exhaustive variants
of these checks live in the test suite; here the instance sizes are chosen so
a full `verify --suite all` stays interactive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import calibration
from .bounded_spread import bounded_spread_spanner
from .bounds import (
    analytic_bound,
    brute_min_tree,
    inscribed_triangle_min_perimeter,
    iter_labeled_trees,
    triangle_perimeter,
)
from .core import PointSet, format_points, spread
from .delaunay import delaunay
from .generators import (
    GridSquaresSpec,
    gen_circle,
    gen_convex_rect,
    gen_grid_squares,
    gen_multi_circle,
    gen_random,
)
from .geograph import GeoGraph, dilation, euclidean_matrix, format_graph
from .highd import greedy_tspanner, sparse_spanner_highd
from .mst import emst_2d, mst_of_graph
from .spanner2d import sparse_spanner_2d
from .tree_partition import partition_tree

ABS_TOL = 1e-9
SUITES = ("bounds", "lemmas", "all")


@dataclass
class CheckRow:
    name: str
    params: str
    bound: str
    measured: str
    passed: bool


def _row(name: str, params: str, bound, measured, passed: bool) -> CheckRow:
    fmt = lambda v: v if isinstance(v, str) else f"{v:.8g}"
    return CheckRow(name, params, fmt(bound), fmt(measured), passed)


def _full_grid(r: int) -> PointSet:
    return PointSet.from_coords(
        [(float(x), float(y)) for x in range(r) for y in range(r)]
    )


# ---------------------------------------------------------------- bounds ---

def _circle_tree_rows(ns=(4, 5, 6, 7, 8)) -> list[CheckRow]:
    rows = []
    for n in ns:
        opt, _ = brute_min_tree(gen_circle(n))
        for kind in ("tree_circle", "steiner_circle"):
            b = analytic_bound(kind, n=n)
            rows.append(_row(kind, f"n={n}", b, opt, opt >= b - ABS_TOL))
    opt4, _ = brute_min_tree(gen_circle(4))
    exact = 1.0 + math.sqrt(2.0)
    rows.append(
        _row("tree_circle_optimum", "n=4", exact, opt4, abs(opt4 - exact) <= ABS_TOL)
    )
    return rows


def _formula_rows() -> list[CheckRow]:
    # 1/sin(pi/n) > n/pi reduces to sin x < x; report the worst margin
    margin = min(
        analytic_bound("steiner_circle", n=n) - n / math.pi for n in range(2, 2000)
    )
    rows = [_row("steiner_exceeds_n_over_pi", "n=2..1999", 0.0, margin, margin > 0.0)]
    margin2 = min(
        analytic_bound("tree_circle", n=n) - (2.0 * n / math.pi - 1.0)
        for n in range(2, 2000)
    )
    rows.append(_row("tree_exceeds_2n_over_pi_minus_1", "n=2..1999", 0.0, margin2, margin2 >= 0.0))
    return rows


def _general_k_rows(cases=((40, 1), (60, 2), (60, 5))) -> list[CheckRow]:
    rows = []
    for n, k in cases:
        g = sparse_spanner_2d(gen_multi_circle(n, k), k)
        d = dilation(g).dilation
        b = analytic_bound("general_k", n=n, k=k)
        rows.append(_row("general_k", f"n={n} k={k}", b, d, d >= b - ABS_TOL))
    return rows


def _convex_rows(n=34) -> list[CheckRow]:
    S = gen_convex_rect(n)
    d = dilation(emst_2d(S)).dilation
    b = analytic_bound("convex_k", n=n)
    return [_row("convex_k", f"n={n} k=0", b, d, d >= b - ABS_TOL)]


def _grid_rows(r=16, ks=(0, 3, 8, 24)) -> list[CheckRow]:
    rows = []
    for k in ks:
        m = math.isqrt(k + 1)
        if m * m != k + 1 or 4 * m > r:
            continue  # outside the bound's 1 <= m <= r/4 validity range
        S = gen_grid_squares(GridSquaresSpec(r=r, m=m, n=r * r, dim=2))
        d = dilation(bounded_spread_spanner(S, k)).dilation
        b = analytic_bound("grid", r=r, m=m)
        rows.append(_row("grid", f"r={r} m={m} k={k}", b, d, d >= b - ABS_TOL))
    return rows


def _triangle_rows(samples=100_000, seed=0) -> list[CheckRow]:
    measured = inscribed_triangle_min_perimeter(samples, seed)
    rows = [
        _row("inscribed_triangle", f"samples={samples}", 4.0, measured, measured >= 4.0 - 1e-6)
    ]
    witness = triangle_perimeter((1.0, 0.0), (-1.0, 0.0), (-1.0, 0.0))
    rows.append(_row("degenerate_triangle", "a=(1,0) b=c=(-1,0)", 4.0, witness, witness == 4.0))
    return rows


def bounds_suite(seed: int = 0) -> list[CheckRow]:
    rows = []
    rows += _circle_tree_rows()
    rows += _formula_rows()
    rows += _general_k_rows()
    rows += _convex_rows()
    rows += _grid_rows()
    rows += _triangle_rows(seed=seed)
    return rows


# ---------------------------------------------------------------- lemmas ---

def _tree_paths(tree: GeoGraph) -> list[list[int]]:
    """parent map per root, parent[root][v]; trees are small here."""
    n = tree.n
    adj = tree.adjacency()
    parents = []
    for root in range(n):
        parent = [-1] * n
        parent[root] = root
        stack = [root]
        while stack:
            u = stack.pop()
            for v, _ in adj[u]:
                if parent[v] < 0:
                    parent[v] = u
                    stack.append(v)
        parents.append(parent)
    return parents


def _path_vertices(parent: list[int], root: int, v: int) -> list[int]:
    path = [v]
    while v != root:
        v = parent[v]
        path.append(v)
    return path


def _mst_dilation_rows(seed: int) -> list[CheckRow]:
    worst = -math.inf
    for s in range(seed, seed + 3):
        S = gen_random(40, 2, s)
        d = dilation(emst_2d(S)).dilation
        worst = max(worst, d / (len(S) - 1))
    return [_row("mst_dilation_le_n_minus_1", "n=40, 3 seeds", 1.0, worst, worst <= 1.0 + ABS_TOL)]


def _spanner_tree_rows(seed: int, n=60, t=2.0) -> list[CheckRow]:
    S = gen_random(n, 2, seed)
    T = mst_of_graph(greedy_tspanner(S, t))
    emat = euclidean_matrix(S)
    adj = T.adjacency()
    parents = _tree_paths(T)

    worst_edge = 0.0
    for p in range(n):
        parent = parents[p]
        for q in range(p + 1, n):
            path = _path_vertices(parent, p, q)
            longest = max(
                emat[path[a], path[a + 1]] for a in range(len(path) - 1)
            )
            worst_edge = max(worst_edge, longest / (t * emat[p, q]))
    rows = [_row("tree_path_edges_le_t_d", f"n={n} t={t}", 1.0, worst_edge, worst_edge <= 1.0 + ABS_TOL)]

    dT = dilation(T).dilation
    cap = t * (n - 1)
    rows.append(_row("tree_dilation_le_t_n_minus_1", f"n={n} t={t}", cap, dT, dT <= cap + ABS_TOL))

    # cross-piece detour bound: both endpoints' pieces have <= m vertices
    part = partition_tree(T, 6)
    piece_of = [0] * n
    for pid, piece in enumerate(part.subtrees):
        for v in piece:
            piece_of[v] = pid
    sizes = [len(piece) for piece in part.subtrees]
    worst4 = 0.0
    for p in range(n):
        parent = parents[p]
        for q in range(p + 1, n):
            if piece_of[p] == piece_of[q]:
                continue
            path = _path_vertices(parent, p, q)
            xs = [v for v in path if piece_of[v] == piece_of[p]]
            ys = [v for v in path if piece_of[v] == piece_of[q]]
            mm = max(sizes[piece_of[p]], sizes[piece_of[q]])
            cap4 = (2.0 * t * (mm - 1) + 1.0) * emat[p, q]
            far = emat[np.ix_(xs, ys)].max()
            worst4 = max(worst4, far / cap4)
    rows.append(_row("cross_piece_detour", f"n={n} m=6 t={t}", 1.0, worst4, worst4 <= 1.0 + ABS_TOL))
    return rows


def _highd_degree_rows(seed: int) -> list[CheckRow]:
    S = gen_random(80, 3, seed)
    res = sparse_spanner_highd(S, 9, 2.0)
    tree = mst_of_graph(greedy_tspanner(S, 2.0))
    tdeg = tree.degrees()
    gdeg = res.graph.degrees()
    bdeg = [0] * len(S)
    for i, j in res.inner_spanner_edges:
        bdeg[i] += 1
        bdeg[j] += 1
    bset = set(res.X)
    violations = 0
    for v in range(len(S)):
        if v not in bset:
            if gdeg[v] != tdeg[v]:
                violations += 1
        elif gdeg[v] > tdeg[v] - 1 + bdeg[v]:
            violations += 1
    return [_row("highd_degree_accounting", "n=80 D=3 k=9", 0, violations, violations == 0)]


def _lbsquare_rows() -> list[CheckRow]:
    # 7 boundary points of the side-2 square {1,2,3}^2, one corner dropped,
    # listed in cyclic boundary order
    cyc = [(1, 1), (2, 1), (3, 1), (3, 2), (2, 3), (1, 3), (1, 2)]
    n, side = len(cyc), 2.0
    coords = [(float(x), float(y)) for x, y in cyc]
    dmat = [[math.dist(a, b) for b in coords] for a in coords]
    worst = math.inf
    for edges in iter_labeled_trees(n):
        adj: list[list[tuple[int, float]]] = [[] for _ in range(n)]
        for i, j in edges:
            adj[i].append((j, dmat[i][j]))
            adj[j].append((i, dmat[i][j]))
        best_consecutive = 0.0
        for src in range(n):
            dist = [-1.0] * n
            dist[src] = 0.0
            stack = [src]
            while stack:
                u = stack.pop()
                for v, w in adj[u]:
                    if dist[v] < 0.0:
                        dist[v] = dist[u] + w
                        stack.append(v)
            best_consecutive = max(best_consecutive, dist[(src + 1) % n])
        worst = min(worst, best_consecutive)
    return [_row("square_boundary_detour", "7 points, side 2", side, worst, worst >= side - ABS_TOL)]


def _delaunay_stretch_rows(seed: int) -> list[CheckRow]:
    cap = 2.0 * math.pi / (3.0 * math.cos(math.pi / 6.0))
    worst = -math.inf
    for s in range(seed, seed + 5):
        S = gen_random(60, 2, s)
        worst = max(worst, dilation(delaunay(S)).dilation)
    return [_row("delaunay_stretch", "n=60, 5 seeds", cap, worst, worst <= cap + 1e-6)]


def lemmas_suite(seed: int = 0) -> list[CheckRow]:
    rows = []
    rows += _mst_dilation_rows(seed)
    rows += _spanner_tree_rows(seed)
    rows += _highd_degree_rows(seed)
    rows += _lbsquare_rows()
    rows += _delaunay_stretch_rows(seed)
    return rows


# --------------------------------------------------- scaling and budgets ---

def scaling_ratio_2d(seed: int = 7) -> float:
    worst = -math.inf
    for n in (64, 128, 256):
        S = gen_random(n, 2, seed)
        for k in (0, 1, 3, 7, 15):
            d = dilation(sparse_spanner_2d(S, k)).dilation
            worst = max(worst, d * (k + 1) / n)
    return worst


def scaling_ratio_highd(seed: int = 7) -> float:
    worst = -math.inf
    for n in (64, 128, 256):
        S = gen_random(n, 2, seed)
        for k in (0, 1, 3, 7, 15):
            d = dilation(sparse_spanner_highd(S, k, 2.0).graph).dilation
            worst = max(worst, d * (k + 1) / n)
    return worst


def scaling_ratio_spread() -> float:
    S = _full_grid(16)
    s = spread(S)
    worst = -math.inf
    for k in (0, 3, 8, 24):
        d = dilation(bounded_spread_spanner(S, k)).dilation
        worst = max(worst, d * (k + 1) ** 0.5 / s)
    return worst


def _scaling_rows() -> list[CheckRow]:
    rows = []
    for name, measure, frozen in (
        ("scaling_2d", scaling_ratio_2d, calibration.C_2D),
        ("scaling_highd", scaling_ratio_highd, calibration.C_HD),
        ("scaling_spread", scaling_ratio_spread, calibration.C_SPREAD),
    ):
        cap = frozen * calibration.HEADROOM
        got = measure()
        rows.append(_row(name, "calibrated grid", cap, got, got <= cap))
    return rows


def _budget_rows() -> list[CheckRow]:
    bad = 0
    for n in (20, 50):
        for dim in (2, 3):
            S = gen_random(n, dim, 11)
            for k in (0, 1, 5):
                built = [sparse_spanner_highd(S, k).graph, bounded_spread_spanner(S, k)]
                if dim == 2:
                    built.append(sparse_spanner_2d(S, k))
                for g in built:
                    ok = n - 1 <= len(g.edges) <= n - 1 + k and g.is_connected()
                    bad += 0 if ok else 1
    return [_row("edge_budgets", "n in {20,50}, k in {0,1,5}", 0, bad, bad == 0)]


def _determinism_rows() -> list[CheckRow]:
    S = gen_random(40, 2, 3)
    again = gen_random(40, 2, 3)
    same = format_points(S) == format_points(again)
    for build in (
        lambda: sparse_spanner_2d(S, 5),
        lambda: sparse_spanner_highd(S, 5).graph,
        lambda: bounded_spread_spanner(S, 5),
    ):
        g1, g2 = build(), build()
        same = same and format_graph(g1) == format_graph(g2)
        same = same and dilation(g1, workers=1) == dilation(g2, workers=4)
    return [_row("determinism", "n=40 k=5, workers 1 vs 4", "identical", "identical" if same else "drift", same)]


def run_suite(name: str, seed: int = 0) -> list[CheckRow]:
    if name == "bounds":
        return bounds_suite(seed)
    if name == "lemmas":
        return lemmas_suite(seed)
    if name == "all":
        return (
            bounds_suite(seed)
            + lemmas_suite(seed)
            + _scaling_rows()
            + _budget_rows()
            + _determinism_rows()
        )
    raise ValueError(f"unknown suite {name!r}")
