"""Spanner for point sets of bounded spread: cell stars plus a small spanner
on the cell representatives.

For k <= 2 the graph is a single star, so the dilation is at most twice the
spread. For larger k the bounding cube of side equal to the diameter is cut
into m^D cells with m = floor((k-1)^(1/D)); every point connects to the
lowest-index point of its cell and the representatives are joined by a
greedy t-spanner. Coordinates are never rescaled; all stated bounds divide
out the measured minimum distance.
"""

from __future__ import annotations

import math

from .core import InputError, PointSet
from .geograph import GeoGraph
from .highd import greedy_tspanner


def iroot(value: int, degree: int) -> int:
    """floor(value ** (1/degree)) in exact integer arithmetic."""
    if value < 0 or degree < 1:
        raise InputError("iroot needs value >= 0 and degree >= 1")
    if value == 0:
        return 0
    guess = int(round(value ** (1.0 / degree)))
    while guess**degree > value:
        guess -= 1
    while (guess + 1) ** degree <= value:
        guess += 1
    return guess


def _star(ps: PointSet, center: int) -> GeoGraph:
    return GeoGraph(ps, tuple((center, i) for i in range(len(ps)) if i != center))


def bounded_spread_spanner(ps: PointSet, k: int, t: float = 2.0) -> GeoGraph:
    """Connected graph on ps with at most n-1+k edges; dilation degrades
    only with the spread of ps, not with n."""
    n = len(ps)
    if not 0 <= k < n:
        raise InputError("bounded_spread_spanner needs 0 <= k < n")
    if not t > 1.0:
        raise InputError("bounded_spread_spanner needs t > 1")
    if n == 1:
        return GeoGraph(ps, ())
    if k <= 2:
        return _star(ps, 0)

    dim = ps.dim
    m = iroot(k - 1, dim)
    arr = ps.as_array()
    mins = arr.min(axis=0)
    diff = arr[:, None, :] - arr[None, :, :]
    side = float(math.sqrt((diff * diff).sum(axis=2).max()))
    cell_side = side / m

    def cell_of(row) -> tuple[int, ...]:
        # half-open cells, the last one closed, so the far face stays covered
        return tuple(
            min(int((row[axis] - mins[axis]) / cell_side), m - 1) for axis in range(dim)
        )

    reps: dict[tuple[int, ...], int] = {}
    assignment: list[int] = []
    for i in range(n):
        key = cell_of(arr[i])
        rep = reps.setdefault(key, i)
        assignment.append(rep)

    boundary = sorted(reps.values())
    edges = {(rep, i) if rep < i else (i, rep) for i, rep in enumerate(assignment) if rep != i}

    if len(boundary) > 1:
        sub = ps.subset(boundary)
        t_eff = t
        while True:
            inner = greedy_tspanner(sub, t_eff)
            if len(inner.edges) <= 2 * len(boundary):
                break
            t_eff *= 1.5  # relax the stretch target until the budget fits
        edges.update(
            tuple(sorted((boundary[i], boundary[j]))) for i, j in inner.edges
        )
    return GeoGraph(ps, tuple(sorted(edges)))
