"""Spanners in arbitrary dimension: the greedy t-spanner and the budgeted
tree-plus-boundary-spanner construction built on top of it.

The budgeted builder takes the minimum spanning tree T of a greedy t-spanner,
splits it into m+1 subtrees, and re-joins the boundary X of the split (the
endpoints of removed tree edges, |X| <= 2m) with a fresh greedy t-spanner.
m is pushed as high as the edge budget n-1+k allows. Stretch across pieces
then telescopes through X, giving dilation O(t^2 * n / m) while the budget
pins m near k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import InputError, PointSet
from .geograph import GeoGraph
from .mst import mst_of_graph
from .tree_partition import TreePartition, partition_tree


def greedy_tspanner(ps: PointSet, t: float) -> GeoGraph:
    """Path-greedy t-spanner: scan pairs by increasing distance, keep a pair
    exactly when the current graph distance exceeds t times its length.

    The result is connected and has dilation at most t.
    """
    if not t > 1.0:
        raise InputError("greedy_tspanner needs t > 1")
    n = len(ps)
    if n == 1:
        return GeoGraph(ps, ())
    coords = [p.coords for p in ps]
    pairs = sorted(
        (math.dist(coords[i], coords[j]), i, j)
        for i in range(n)
        for j in range(i + 1, n)
    )
    # dist[u, v] is maintained as the exact shortest-path matrix of the
    # accepted edges; each accepted edge relaxes it in one vectorized pass.
    dist = np.full((n, n), math.inf)
    np.fill_diagonal(dist, 0.0)
    edges = []
    for d, i, j in pairs:
        if dist[i, j] > t * d:
            edges.append((i, j))
            through = np.minimum(
                dist[:, i, None] + (d + dist[j, None, :]),
                dist[:, j, None] + (d + dist[i, None, :]),
            )
            np.minimum(dist, through, out=dist)
    return GeoGraph(ps, tuple(edges))


@dataclass(frozen=True)
class HighDResult:
    """Budgeted spanner plus the pieces it was assembled from.

    X is the boundary of the split (sorted vertex indices), and
    inner_spanner_edges are the fresh edges on X in input indexing. The
    degree of a vertex outside X equals its tree degree; inside X it is
    at most tree degree - 1 + its degree among the inner edges.
    """

    graph: GeoGraph
    subtrees: TreePartition
    X: tuple[int, ...]
    inner_spanner_edges: tuple[tuple[int, int], ...]
    max_degree: int


def _boundary_spanner(
    ps: PointSet, boundary: tuple[int, ...], t: float
) -> tuple[tuple[int, int], ...]:
    if len(boundary) < 2:
        return ()
    sub = ps.subset(boundary)
    inner = greedy_tspanner(sub, t)
    return tuple(
        tuple(sorted((boundary[i], boundary[j]))) for i, j in inner.edges
    )


def sparse_spanner_highd(ps: PointSet, k: int, t: float = 2.0) -> HighDResult:
    """Connected graph on ps with at most n-1+k edges, any dimension."""
    n = len(ps)
    if not 0 <= k < n:
        raise InputError("sparse_spanner_highd needs 0 <= k < n")
    if not t > 1.0:
        raise InputError("sparse_spanner_highd needs t > 1")

    base = greedy_tspanner(ps, t)
    tree = mst_of_graph(base)

    def attempt(m: int) -> tuple[TreePartition, tuple[int, ...], tuple[tuple[int, int], ...]] | None:
        part = partition_tree(tree, m + 1)
        boundary = tuple(sorted(part.boundary))
        joins = _boundary_spanner(ps, boundary, t)
        if (n - 1 - m) + len(joins) <= n - 1 + k:
            return part, boundary, joins
        return None

    lo, hi = 0, n - 1
    best = attempt(0)
    assert best is not None  # m = 0 is the bare tree, always within budget
    while lo < hi:
        mid = (lo + hi + 1) // 2
        got = attempt(mid)
        if got is None:
            hi = mid - 1
        else:
            best = got
            lo = mid
    part, boundary, joins = best

    edges = (set(tree.edges) - set(part.removed_edges)) | set(joins)
    graph = GeoGraph(ps, tuple(sorted(edges)))
    return HighDResult(graph, part, boundary, joins, graph.max_degree())
