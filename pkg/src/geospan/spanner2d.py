"""Planar spanner with n-1+k edges: spanning tree pieces joined by the
shortest Delaunay edge between each pair of pieces.

With m = floor((k+5)/2) pieces, the output has at most
(n-1) - (m-1) + (3m-6) = n + 2m - 6 <= n - 1 + k edges, because the piece
contraction of a planar graph stays planar. k = 0 falls back to the plain
Euclidean minimum spanning tree.
"""

from __future__ import annotations

from .core import InputError, PointSet
from .delaunay import delaunay
from .geograph import GeoGraph
from .mst import emst_2d, kruskal
from .tree_partition import partition_tree


def sparse_spanner_2d(ps: PointSet, k: int) -> GeoGraph:
    """Connected planar graph on ps with at most n-1+k edges."""
    if ps.dim != 2:
        raise InputError("sparse_spanner_2d needs planar input")
    n = len(ps)
    if k < 0:
        raise InputError("k must be >= 0")
    if k == 0:
        return emst_2d(ps)
    if n < 3 or k > 2 * n - 5:
        raise InputError("k must satisfy k <= 2n-5 (and n >= 3) when k > 0")

    dt = delaunay(ps)
    tree_edges = kruskal(n, [(dt.weight(i, j), i, j) for i, j in dt.edges])
    tree = GeoGraph(ps, tuple(tree_edges))
    m = min((k + 5) // 2, n)
    part = partition_tree(tree, m)

    piece_of = [0] * n
    for pid, piece in enumerate(part.subtrees):
        for v in piece:
            piece_of[v] = pid

    edges = set(tree.edges) - set(part.removed_edges)
    shortest: dict[tuple[int, int], tuple[float, int, int]] = {}
    for i, j in dt.edges:
        pi, pj = piece_of[i], piece_of[j]
        if pi == pj:
            continue
        key = (pi, pj) if pi < pj else (pj, pi)
        cand = (dt.weight(i, j), i, j)
        if key not in shortest or cand < shortest[key]:
            shortest[key] = cand
    edges.update((i, j) for _, i, j in shortest.values())
    return GeoGraph(ps, tuple(sorted(edges)))
