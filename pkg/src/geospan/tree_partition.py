"""Splitting a spanning tree into m balanced vertex-disjoint subtrees.

The recursion roots the tree at its lowest-index leaf and finalizes a hanging
subtree as soon as it reaches n/m vertices, grouping undersized child pieces
with their parent. For trees of maximum degree 6 every piece then holds at
most 5*ceil(n/m) vertices. The recursion can stop short of m pieces; the
remainder is reached by repeatedly splitting the largest piece at its most
balanced edge.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import InputError
from .geograph import GeoGraph

Adjacency = dict[int, list[int]]


@dataclass(frozen=True)
class TreePartition:
    """m subtrees, the m-1 tree edges removed between them, and the set X of
    removed-edge endpoints (the boundary, |X| <= 2(m-1))."""

    subtrees: tuple[tuple[int, ...], ...]
    removed_edges: tuple[tuple[int, int], ...]
    boundary: frozenset[int]


def _rooted(adj: Adjacency, root: int) -> tuple[list[int], dict[int, int]]:
    """Depth-first vertex order (parents first) and the parent map."""
    order = [root]
    parent = {root: root}
    stack = [root]
    while stack:
        u = stack.pop()
        for v in sorted(adj[u], reverse=True):
            if v not in parent:
                parent[v] = u
                order.append(v)
                stack.append(v)
    return order, parent


def _balanced_cut(part: set[int], edges_in: list[tuple[int, int]]) -> tuple[int, int]:
    """Edge of the piece whose removal best balances it (ties: smallest edge)."""
    adj: Adjacency = {v: [] for v in part}
    for i, j in edges_in:
        adj[i].append(j)
        adj[j].append(i)
    order, parent = _rooted(adj, min(part))
    size = {v: 1 for v in part}
    for u in reversed(order):
        if parent[u] != u:
            size[parent[u]] += size[u]
    best: tuple[int, tuple[int, int]] | None = None
    for i, j in sorted(edges_in):
        child = i if parent[i] == j else j
        heavy = max(size[child], len(part) - size[child])
        if best is None or (heavy, (i, j)) < best:
            best = (heavy, (i, j))
    assert best is not None
    return best[1]


def partition_tree(tree: GeoGraph, m: int) -> TreePartition:
    """Partition a spanning tree into exactly m vertex-disjoint subtrees."""
    n = tree.n
    if len(tree.edges) != n - 1 or not tree.is_connected():
        raise InputError("partition_tree needs a spanning tree")
    if not 1 <= m <= n:
        raise InputError("partition_tree needs 1 <= m <= n")

    adj: Adjacency = {v: [] for v in range(n)}
    for i, j in tree.edges:
        adj[i].append(j)
        adj[j].append(i)
    deg = [len(adj[v]) for v in range(n)]
    root = deg.index(min(deg))

    target = n / m
    order, parent = _rooted(adj, root)

    finalized: list[set[int]] = []
    removed: list[tuple[int, int]] = []
    open_piece: dict[int, set[int]] = {}
    for u in reversed(order):  # children are processed before their parent
        piece = {u}
        for v in adj[u]:
            if v == parent[u]:
                continue
            child_piece = open_piece.pop(v)
            if len(child_piece) >= target:
                finalized.append(child_piece)
                removed.append((u, v) if u < v else (v, u))
            else:
                piece |= child_piece
        open_piece[u] = piece
    finalized.append(open_piece.pop(root))

    # top up to exactly m pieces with balanced splits of the largest piece
    edge_pool = set(tree.edges) - set(removed)
    while len(finalized) < m:
        finalized.sort(key=lambda s: (-len(s), min(s)))
        part = finalized[0]
        inside = [e for e in edge_pool if e[0] in part and e[1] in part]
        cut = _balanced_cut(part, inside)
        edge_pool.discard(cut)
        removed.append(cut)
        local: Adjacency = {v: [] for v in part}
        for i, j in inside:
            if (i, j) != cut:
                local[i].append(j)
                local[j].append(i)
        side = {cut[0]}
        stack = [cut[0]]
        while stack:
            u = stack.pop()
            for v in local[u]:
                if v not in side:
                    side.add(v)
                    stack.append(v)
        finalized[0] = part - side
        finalized.append(side)

    subtrees = tuple(sorted((tuple(sorted(s)) for s in finalized), key=lambda s: s[0]))
    removed_sorted = tuple(sorted(removed))
    boundary = frozenset(v for e in removed_sorted for v in e)
    return TreePartition(subtrees, removed_sorted, boundary)
