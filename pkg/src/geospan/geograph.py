"""Euclidean networks over point sets: shortest paths and exact dilation.

A GeoGraph stores undirected edges as index pairs only; edge weights are
always recomputed from coordinates, so they can never go stale. Dilation is
measured exactly by one single-source Dijkstra run per vertex. Unreachable is
reported as ``None``, never as a sentinel float.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from heapq import heappop, heappush
from pathlib import Path
from typing import Iterable

import numpy as np

from .core import InputError, PointSet, distance


@dataclass(frozen=True)
class GeoGraph:
    """Undirected geometric graph: a point set plus index-pair edges."""

    vertices: PointSet
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        n = len(self.vertices)
        norm = set()
        for e in self.edges:
            i, j = int(e[0]), int(e[1])
            if i == j:
                raise InputError("self-loops are not allowed")
            if not (0 <= i < n and 0 <= j < n):
                raise InputError(f"edge endpoint out of range: ({i}, {j})")
            norm.add((i, j) if i < j else (j, i))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def weight(self, i: int, j: int) -> float:
        return distance(self.vertices[i], self.vertices[j])

    def adjacency(self) -> list[list[tuple[int, float]]]:
        """Neighbor lists with recomputed weights (cached; the graph is frozen)."""
        adj = getattr(self, "_adj", None)
        if adj is None:
            adj = [[] for _ in range(self.n)]
            for i, j in self.edges:
                w = self.weight(i, j)
                adj[i].append((j, w))
                adj[j].append((i, w))
            object.__setattr__(self, "_adj", adj)
        return adj

    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return tuple(deg)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def total_weight(self) -> float:
        return sum(self.weight(i, j) for i, j in self.edges)

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        adj = self.adjacency()
        seen = [False] * self.n
        stack = [0]
        seen[0] = True
        count = 1
        while stack:
            u = stack.pop()
            for v, _ in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    count += 1
                    stack.append(v)
        return count == self.n


@dataclass(frozen=True)
class DilationReport:
    """Result of an exact dilation measurement.

    ``connected`` is the explicit reachability flag; when it is False the
    dilation is undefined and both other fields are None. Ties in the argmax
    pair are broken toward the lexicographically smallest pair.
    """

    dilation: float | None
    argmax_pair: tuple[int, int] | None
    connected: bool


def _dijkstra(adj: list[list[tuple[int, float]]], source: int) -> list[float]:
    # math.inf marks unreached entries internally; public APIs translate.
    dist = [math.inf] * len(adj)
    dist[source] = 0.0
    heap: list[tuple[float, int]] = [(0.0, source)]
    while heap:
        d, u = heappop(heap)
        if d > dist[u]:
            continue
        for v, w in adj[u]:
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                heappush(heap, (nd, v))
    return dist


def _check_vertex(g: GeoGraph, u: int) -> None:
    if not 0 <= u < g.n:
        raise InputError(f"vertex index out of range: {u}")


def graph_distance(g: GeoGraph, u: int, v: int) -> float | None:
    """Shortest-path distance in g, or None if v is unreachable from u."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    d = _dijkstra(g.adjacency(), u)[v]
    return None if math.isinf(d) else d


def dilation_between(g: GeoGraph, u: int, v: int) -> float | None:
    """Stretch of one pair: graph distance over Euclidean distance."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise InputError("stretch of a pair needs two distinct vertices")
    d = graph_distance(g, u, v)
    return None if d is None else d / g.weight(u, v)


def euclidean_matrix(ps: PointSet) -> np.ndarray:
    """Dense pairwise distances, entry for entry equal to core.distance."""
    n = len(ps)
    coords = [p.coords for p in ps]
    m = np.zeros((n, n))
    for i in range(n):
        ci = coords[i]
        for j in range(i + 1, n):
            d = math.dist(ci, coords[j])
            m[i, j] = d
            m[j, i] = d
    return m


def dilation(g: GeoGraph, workers: int = 1) -> DilationReport:
    """Exact dilation of g: max over vertex pairs of stretch.

    ``workers`` only fans the per-source Dijkstra runs out to a thread pool;
    results are reduced in source order, so the report is identical for every
    worker count.
    """
    if g.n < 2:
        raise InputError("dilation needs at least two vertices")
    if workers < 1:
        raise InputError("workers must be >= 1")
    adj = g.adjacency()
    emat = euclidean_matrix(g.vertices)
    sources = range(g.n - 1)

    def rows() -> Iterable[list[float]]:
        if workers == 1:
            return (_dijkstra(adj, u) for u in sources)
        pool = ThreadPoolExecutor(max_workers=workers)
        try:
            return list(pool.map(_dijkstra, (adj,) * len(sources), sources))
        finally:
            pool.shutdown(wait=True)

    best = -math.inf
    best_pair: tuple[int, int] | None = None
    for u, dist_row in zip(sources, rows()):
        tail = np.asarray(dist_row[u + 1 :])
        if not np.all(np.isfinite(tail)):
            return DilationReport(None, None, False)
        ratios = tail / emat[u, u + 1 :]
        m = float(ratios.max())
        if m > best:
            best = m
            best_pair = (u, u + 1 + int(np.argmax(ratios)))
    return DilationReport(best, best_pair, True)


# Edge-list text format: line 1 is "n E", then E lines "i j" with 0-based
# indices and i < j, sorted lexicographically.

def format_graph(g: GeoGraph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{i} {j}" for i, j in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str, points: PointSet) -> GeoGraph:
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise InputError("empty edge-list file")
    lineno, head = rows[0]
    parts = head.split()
    if len(parts) != 2:
        raise InputError(f"line {lineno}: expected header 'n E'")
    try:
        n, ecount = int(parts[0]), int(parts[1])
    except ValueError:
        raise InputError(f"line {lineno}: expected integer header 'n E'") from None
    if n != len(points):
        raise InputError(f"edge list is over {n} vertices, point set has {len(points)}")
    if len(rows) - 1 != ecount:
        raise InputError(f"expected {ecount} edge lines, found {len(rows) - 1}")
    edges = []
    for lineno, line in rows[1:]:
        fields = line.split()
        if len(fields) != 2:
            raise InputError(f"line {lineno}: expected 'i j'")
        try:
            i, j = int(fields[0]), int(fields[1])
        except ValueError:
            raise InputError(f"line {lineno}: malformed edge") from None
        if not i < j:
            raise InputError(f"line {lineno}: edges must satisfy i < j")
        edges.append((i, j))
    return GeoGraph(points, tuple(edges))


def save_graph(g: GeoGraph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g), encoding="ascii")


def load_graph(path: str | Path, points: PointSet) -> GeoGraph:
    return parse_graph(Path(path).read_text(encoding="ascii"), points)
