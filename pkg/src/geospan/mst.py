"""Minimum spanning trees, Euclidean and graph-restricted.

Kruskal with edges ordered by (weight, i, j) makes the tree deterministic
even on inputs full of ties (grids, cocircular sets). The Euclidean tree is
computed over the Delaunay edges, which contain a minimum spanning tree for
every tie-break, so no quadratic candidate list is needed.
"""

from __future__ import annotations

from .core import InputError, PointSet
from .delaunay import delaunay
from .geograph import GeoGraph


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.rank[ra] < self.rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True


def kruskal(n: int, weighted_edges: list[tuple[float, int, int]]) -> tuple[tuple[int, int], ...]:
    """Forest of minimum total weight over the given candidate edges."""
    uf = UnionFind(n)
    chosen = []
    for _, i, j in sorted(weighted_edges):
        if uf.union(i, j):
            chosen.append((i, j))
            if len(chosen) == n - 1:
                break
    return tuple(chosen)


def emst_2d(ps: PointSet) -> GeoGraph:
    """Euclidean minimum spanning tree of a planar point set."""
    if ps.dim != 2:
        raise InputError("emst_2d needs planar input")
    if len(ps) == 1:
        return GeoGraph(ps, ())
    dt = delaunay(ps)
    cand = [(dt.weight(i, j), i, j) for i, j in dt.edges]
    tree = kruskal(len(ps), cand)
    assert len(tree) == len(ps) - 1
    return GeoGraph(ps, tuple(tree))


def mst_of_graph(g: GeoGraph) -> GeoGraph:
    """Minimum spanning tree over the edges of g (g must be connected)."""
    if not g.is_connected():
        raise InputError("graph is disconnected, it has no spanning tree")
    if g.n == 1:
        return GeoGraph(g.vertices, ())
    cand = [(g.weight(i, j), i, j) for i, j in g.edges]
    tree = kruskal(g.n, cand)
    return GeoGraph(g.vertices, tuple(tree))
