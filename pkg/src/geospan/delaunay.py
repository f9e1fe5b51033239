"""Planar Delaunay triangulation by incremental insertion.

Conflict tests use the exact predicates, with cocircular ties broken by the
indexed perturbation rule of ``predicates.incircle_indexed``. The output is
therefore a unique function of the point set; the seeded random insertion
order only guards against adversarial running time. Fully collinear inputs
degenerate to the monotone path over the points.

The hull is closed with a virtual vertex ``INF`` so insertions outside the
current hull need no special casing. An infinite triangle (INF, u, v), with
u -> v running clockwise along the hull (exterior on its left), is in
conflict with p exactly when p lies strictly left of u -> v, or on the line
through u and v strictly between them.
"""

from __future__ import annotations

import numpy as np

from .core import InputError, PointSet
from .geograph import GeoGraph
from .predicates import incircle_indexed, orient2d

INF = -1

_INSERTION_SEED = 9001  # fixed; the result does not depend on it

Triangle = tuple[int, int, int]


def _canonical(a: int, b: int, c: int) -> Triangle:
    # rotate the cycle so the smallest label (INF if present) comes first
    if a <= b and a <= c:
        return (a, b, c)
    if b <= c:
        return (b, c, a)
    return (c, a, b)


def _strictly_between(p, u, v) -> bool:
    # p is known collinear with u, v; compare along the wider axis
    if u[0] != v[0]:
        lo, hi = min(u[0], v[0]), max(u[0], v[0])
        return lo < p[0] < hi
    lo, hi = min(u[1], v[1]), max(u[1], v[1])
    return lo < p[1] < hi


def _all_collinear(coords) -> bool:
    base = coords[0]
    ref = None
    for c in coords[1:]:
        if ref is None:
            ref = c
            continue
        if orient2d(base, ref, c) != 0:
            return False
    return True


class _Triangulation:
    def __init__(self, coords: list[tuple[float, ...]]):
        self.coords = coords
        self.tris: set[Triangle] = set()

    def _conflict(self, tri: Triangle, p: int) -> bool:
        a, b, c = tri
        if a == INF:
            u, v = b, c
            side = orient2d(self.coords[u], self.coords[v], self.coords[p])
            if side != 0:
                return side > 0
            return _strictly_between(self.coords[p], self.coords[u], self.coords[v])
        return incircle_indexed(self.coords, a, b, c, p) > 0

    def insert(self, p: int) -> None:
        dead = [t for t in self.tris if self._conflict(t, p)]
        if not dead:
            raise AssertionError("insertion point conflicts with no triangle")
        directed = set()
        for a, b, c in dead:
            directed.update(((a, b), (b, c), (c, a)))
        self.tris.difference_update(dead)
        for a, b in directed:
            if (b, a) in directed:
                continue  # interior edge of the cavity
            if a != INF and b != INF:
                # a zero-area triangle here would mean the conflict rule broke
                if orient2d(self.coords[a], self.coords[b], self.coords[p]) <= 0:
                    raise AssertionError("degenerate triangle in cavity retriangulation")
            self.tris.add(_canonical(a, b, p))


def _triangulate(ps: PointSet) -> set[Triangle]:
    coords = [p.coords for p in ps]
    order = [int(i) for i in np.random.default_rng(_INSERTION_SEED).permutation(len(coords))]
    i0, i1 = order[0], order[1]
    third = None
    for pos in range(2, len(order)):
        if orient2d(coords[i0], coords[i1], coords[order[pos]]) != 0:
            third = pos
            break
    assert third is not None  # caller already ruled out collinear input
    i2 = order.pop(third)
    if orient2d(coords[i0], coords[i1], coords[i2]) < 0:
        i1, i2 = i2, i1
    tri = _Triangulation(coords)
    tri.tris = {
        _canonical(i0, i1, i2),
        _canonical(INF, i1, i0),
        _canonical(INF, i2, i1),
        _canonical(INF, i0, i2),
    }
    for p in order[2:]:
        tri.insert(p)
    return tri.tris


def delaunay_triangles(ps: PointSet) -> tuple[Triangle, ...]:
    """Finite triangles (ccw, canonically rotated) of the triangulation.

    Empty for collinear input.
    """
    if ps.dim != 2:
        raise InputError("delaunay is a planar construction")
    if len(ps) < 3 or _all_collinear([p.coords for p in ps]):
        return ()
    finite = [t for t in _triangulate(ps) if t[0] != INF]
    return tuple(sorted(finite))


def delaunay(ps: PointSet) -> GeoGraph:
    """Delaunay graph of a planar point set (n >= 2).

    Contains every convex hull edge and the Euclidean minimum spanning tree;
    collinear inputs yield the monotone path.
    """
    if ps.dim != 2:
        raise InputError("delaunay is a planar construction")
    if len(ps) < 2:
        raise InputError("delaunay needs at least two points")
    coords = [p.coords for p in ps]
    if len(ps) == 2 or _all_collinear(coords):
        order = sorted(range(len(ps)), key=lambda i: coords[i])
        edges = tuple(zip(order, order[1:]))
        return GeoGraph(ps, edges)
    edges = set()
    for a, b, c in _triangulate(ps):
        for u, v in ((a, b), (b, c), (c, a)):
            if u != INF and v != INF:
                edges.add((u, v) if u < v else (v, u))
    return GeoGraph(ps, tuple(sorted(edges)))
