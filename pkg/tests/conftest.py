"""Shared oracles for the test suite.

These are deliberately independent of the library internals: shortest paths
via dense Floyd-Warshall, dilation by scanning every pair, hulls by gift
wrapping. Slow and obvious beats fast and shared.
"""

from __future__ import annotations

import math


def floyd_matrix(n: int, weighted_edges) -> list[list[float]]:
    dist = [[math.inf] * n for _ in range(n)]
    for i in range(n):
        dist[i][i] = 0.0
    for i, j, w in weighted_edges:
        if w < dist[i][j]:
            dist[i][j] = dist[j][i] = w
    for via in range(n):
        dvia = dist[via]
        for a in range(n):
            da = dist[a]
            base = da[via]
            if base == math.inf:
                continue
            for b in range(n):
                alt = base + dvia[b]
                if alt < da[b]:
                    da[b] = alt
    return dist


def graph_floyd(graph) -> list[list[float]]:
    pts = [tuple(p) for p in graph.vertices]
    return floyd_matrix(
        len(pts), [(i, j, math.dist(pts[i], pts[j])) for i, j in graph.edges]
    )


def oracle_dilation(graph) -> tuple[float, tuple[int, int]]:
    """Max stretch over all pairs, scanning the Floyd matrix."""
    pts = [tuple(p) for p in graph.vertices]
    dist = graph_floyd(graph)
    best, best_pair = -math.inf, None
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            ratio = dist[i][j] / math.dist(pts[i], pts[j])
            if ratio > best:
                best, best_pair = ratio, (i, j)
    return best, best_pair


def gift_wrap_hull(coords: list[tuple[float, float]]) -> list[int]:
    """Indices of convex hull vertices in ccw order (collinear points kept off)."""

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    n = len(coords)
    start = min(range(n), key=lambda i: coords[i])
    hull = [start]
    while True:
        cur = hull[-1]
        cand = (cur + 1) % n
        for i in range(n):
            if i == cur:
                continue
            c = cross(coords[cur], coords[cand], coords[i])
            if c < 0 or (
                c == 0
                and math.dist(coords[cur], coords[i])
                > math.dist(coords[cur], coords[cand])
            ):
                cand = i
        if cand == start:
            return hull
        hull.append(cand)
