"""Analytic lower bounds and the brute-force oracles they are checked against.

The closed-form bounds come from the adversarial families in ``generators``;
the oracles search every labeled spanning tree (via Pruefer sequences) or
every edge subset of a fixed size, so they are only usable for tiny n but are
independent of all builder code.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .core import InputError, PointSet
from .geograph import GeoGraph, euclidean_matrix

BOUND_KINDS = ("steiner_circle", "tree_circle", "general_k", "convex_k", "grid")


def _need_int(params: dict, name: str) -> int:
    if name not in params:
        raise InputError(f"bound needs parameter '{name}'")
    v = params[name]
    if int(v) != v:
        raise InputError(f"parameter '{name}' must be an integer")
    return int(v)


def analytic_bound(kind: str, **params) -> float:
    """Evaluate one closed-form dilation lower bound.

    steiner_circle  n points on a circle, any Steiner tree:  1/sin(pi/n)
    tree_circle     n points on a circle, any spanning tree:
                    (4 - 2 sin(pi/n)) / (2 sin(pi/n))
    general_k       n points, n-1+k edges: (2/pi) * floor(n/(k+1)) - 1
    convex_k        stretched convex family, k = 0, m = floor(n/4 - 1/2):
                    min(sqrt(2) m / ln m, (1 + ln(m)/m)^m - 1)
    grid            r^D grid, n-1+(m^D - 1) edges: r/(2m) - 1
    """
    if kind == "steiner_circle":
        n = _need_int(params, "n")
        if n < 2:
            raise InputError("steiner_circle needs n >= 2")
        return 1.0 / math.sin(math.pi / n)
    if kind == "tree_circle":
        n = _need_int(params, "n")
        if n < 2:
            raise InputError("tree_circle needs n >= 2")
        s = 2.0 * math.sin(math.pi / n)
        return (4.0 - s) / s
    if kind == "general_k":
        n, k = _need_int(params, "n"), _need_int(params, "k")
        if not 0 < k < n:
            raise InputError("general_k needs 0 < k < n")
        return (2.0 / math.pi) * (n // (k + 1)) - 1.0
    if kind == "convex_k":
        n = _need_int(params, "n")
        k = _need_int(params, "k") if "k" in params else 0
        if k != 0:
            raise InputError("convex_k is only evaluated for k = 0")
        if n < 10:
            raise InputError("convex_k needs n >= 10")
        m = (n - 2) // 4
        horizontal = math.sqrt(2.0) * m / math.log(m)
        vertical = (1.0 + math.log(m) / m) ** m - 1.0
        return min(horizontal, vertical)
    if kind == "grid":
        r, m = _need_int(params, "r"), _need_int(params, "m")
        if r < 4 or not 1 <= m or 4 * m > r:
            raise InputError("grid needs r >= 4 and 1 <= m <= r/4")
        return r / (2.0 * m) - 1.0
    raise InputError(f"unknown bound kind {kind!r}")


@dataclass(frozen=True)
class BoundSpec:
    """A bound kind with pinned parameters and its evaluated value."""

    kind: str
    params: tuple[tuple[str, int], ...]
    value: float

    @classmethod
    def evaluate(cls, kind: str, **params) -> "BoundSpec":
        value = analytic_bound(kind, **params)
        return cls(kind, tuple(sorted(params.items())), value)

    def recheck(self) -> bool:
        return analytic_bound(self.kind, **dict(self.params)) == self.value


def prufer_edges(seq: tuple[int, ...], n: int) -> tuple[tuple[int, int], ...]:
    """Labeled tree on n vertices encoded by a Pruefer sequence."""
    deg = [1] * n
    for v in seq:
        deg[v] += 1
    edges = []
    for v in seq:
        for u in range(n):
            if deg[u] == 1:
                break
        edges.append((u, v) if u < v else (v, u))
        deg[u] -= 1
        deg[v] -= 1
    last = [u for u in range(n) if deg[u] == 1]
    edges.append((last[0], last[1]))
    return tuple(edges)


def iter_labeled_trees(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All n^(n-2) labeled trees, in Pruefer-lexicographic order."""
    if n == 1:
        yield ()
        return
    if n == 2:
        yield ((0, 1),)
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield prufer_edges(seq, n)


def tree_dilation_pruned(
    edges: tuple[tuple[int, int], ...],
    dmat: list[list[float]],
    inv: list[list[float]],
    cutoff: float,
) -> float | None:
    """Dilation of one spanning tree, or None once it reaches the cutoff."""
    n = len(dmat)
    adj: list[list[tuple[int, float]]] = [[] for _ in range(n)]
    for i, j in edges:
        w = dmat[i][j]
        adj[i].append((j, w))
        adj[j].append((i, w))
    worst = 0.0
    for src in range(n - 1):
        dist = [-1.0] * n
        dist[src] = 0.0
        stack = [src]
        while stack:
            u = stack.pop()
            du = dist[u]
            for v, w in adj[u]:
                if dist[v] < 0.0:
                    dist[v] = du + w
                    stack.append(v)
        inv_src = inv[src]
        for tgt in range(src + 1, n):
            r = dist[tgt] * inv_src[tgt]
            if r > worst:
                if r >= cutoff:
                    return None
                worst = r
    return worst


def brute_min_tree(ps: PointSet) -> tuple[float, GeoGraph]:
    """Minimum dilation over every labeled spanning tree (2 <= n <= 8).

    Returns the optimum and the first tree attaining it in enumeration order.
    """
    n = len(ps)
    if not 2 <= n <= 8:
        raise InputError("brute_min_tree enumerates n^(n-2) trees, needs 2 <= n <= 8")
    coords = [p.coords for p in ps]
    dmat = [[math.dist(a, b) for b in coords] for a in coords]
    inv = [[0.0 if i == j else 1.0 / dmat[i][j] for j in range(n)] for i in range(n)]
    best = math.inf
    best_edges: tuple[tuple[int, int], ...] | None = None
    for edges in iter_labeled_trees(n):
        dil = tree_dilation_pruned(edges, dmat, inv, best)
        if dil is not None and dil < best:
            best = dil
            best_edges = edges
    assert best_edges is not None
    return best, GeoGraph(ps, best_edges)


def brute_min_graph(ps: PointSet, k: int) -> tuple[float, GeoGraph]:
    """Minimum dilation over every connected graph with exactly n-1+k edges.

    Exhaustive over edge subsets; guarded to n <= 8 and at most 10^7 subsets.
    Returns the optimum and its first attaining graph in enumeration order.
    """
    n = len(ps)
    if n < 2:
        raise InputError("brute_min_graph needs n >= 2")
    total = n * (n - 1) // 2
    e_target = n - 1 + k
    if k < 0 or e_target > total:
        raise InputError("k must satisfy 0 <= k <= n(n-1)/2 - (n-1)")
    if n > 8 or math.comb(total, e_target) > 10_000_000:
        raise InputError("edge-subset search too large (needs n <= 8, C(C(n,2), n-1+k) <= 1e7)")

    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    pair_i = np.array([p[0] for p in pairs])
    pair_j = np.array([p[1] for p in pairs])
    emat = euclidean_matrix(ps)
    pair_w = np.array([emat[i, j] for i, j in pairs])
    safe = emat.copy()
    np.fill_diagonal(safe, 1.0)

    best = math.inf
    best_edges: list[tuple[int, int]] | None = None
    combos = itertools.combinations(range(total), e_target)
    batch_size = 20_000
    while True:
        batch = list(itertools.islice(combos, batch_size))
        if not batch:
            break
        idx = np.array(batch)
        b = idx.shape[0]
        dist = np.full((b, n, n), math.inf)
        dist[:, np.arange(n), np.arange(n)] = 0.0
        rows = np.arange(b)[:, None]
        dist[rows, pair_i[idx], pair_j[idx]] = pair_w[idx]
        dist[rows, pair_j[idx], pair_i[idx]] = pair_w[idx]
        for via in range(n):
            np.minimum(dist, dist[:, :, via, None] + dist[:, via, None, :], out=dist)
        connected = np.isfinite(dist).all(axis=(1, 2))
        dil = (dist / safe[None]).max(axis=(1, 2))
        dil = np.where(connected, dil, math.inf)
        pos = int(dil.argmin())
        if dil[pos] < best:
            best = float(dil[pos])
            best_edges = [pairs[x] for x in batch[pos]]
    if best_edges is None:
        raise InputError("no connected graph with the requested edge count")
    return best, GeoGraph(ps, tuple(best_edges))


def triangle_perimeter(a, b, c) -> float:
    return math.dist(a, b) + math.dist(b, c) + math.dist(c, a)


def inscribed_triangle_min_perimeter(samples: int, seed: int) -> float:
    """Minimum perimeter over `samples` random unit-circle triangles that
    strictly contain the center (rejection sampling on uniform angles)."""
    if samples < 1:
        raise InputError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    need = samples
    best = math.inf
    while need > 0:
        batch = max(4 * need, 1024)
        ang = rng.uniform(0.0, 2.0 * np.pi, size=(batch, 3))
        x = np.cos(ang)
        y = np.sin(ang)
        c01 = x[:, 0] * y[:, 1] - y[:, 0] * x[:, 1]
        c12 = x[:, 1] * y[:, 2] - y[:, 1] * x[:, 2]
        c20 = x[:, 2] * y[:, 0] - y[:, 2] * x[:, 0]
        inside = ((c01 > 0) & (c12 > 0) & (c20 > 0)) | ((c01 < 0) & (c12 < 0) & (c20 < 0))
        take = np.flatnonzero(inside)[:need]
        if take.size:
            per = (
                np.hypot(x[take, 0] - x[take, 1], y[take, 0] - y[take, 1])
                + np.hypot(x[take, 1] - x[take, 2], y[take, 1] - y[take, 2])
                + np.hypot(x[take, 2] - x[take, 0], y[take, 2] - y[take, 0])
            )
            best = min(best, float(per.min()))
            need -= int(take.size)
    return best
