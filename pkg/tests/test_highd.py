from __future__ import annotations

import math

import pytest

from geospan.core import InputError, PointSet
from geospan.generators import gen_random
from geospan.geograph import dilation, dilation_between, format_graph
from geospan.highd import greedy_tspanner, sparse_spanner_highd
from geospan.mst import mst_of_graph


def test_greedy_two_points():
    ps = PointSet.from_coords([(0.0, 0.0, 0.0), (1.0, 2.0, 2.0)])
    g = greedy_tspanner(ps, 2.0)
    assert g.edges == ((0, 1),)
    assert dilation(g).dilation == 1.0


def test_greedy_collinear_chain():
    ps = PointSet.from_coords([(float(i), 0.0) for i in range(8)])
    for t in (1.1, 2.0, 4.0):
        g = greedy_tspanner(ps, t)
        assert g.edges == tuple((i, i + 1) for i in range(7))
        assert math.isclose(dilation(g).dilation, 1.0, rel_tol=1e-12)


def test_greedy_stretch_guarantee():
    for dim in (2, 3, 4):
        for t in (1.5, 2.0):
            ps = gen_random(50, dim, dim * 10)
            g = greedy_tspanner(ps, t)
            assert g.is_connected()
            assert dilation(g).dilation <= t + 1e-9


def test_greedy_every_pair_within_t():
    ps = gen_random(30, 3, 4)
    g = greedy_tspanner(ps, 2.0)
    for u in range(30):
        for v in range(u + 1, 30):
            assert dilation_between(g, u, v) <= 2.0 + 1e-9


def test_greedy_sparser_than_complete():
    ps = gen_random(60, 3, 2)
    g = greedy_tspanner(ps, 2.0)
    assert len(g.edges) < 60 * 59 // 2 / 4


def test_greedy_rejects_t_at_most_one():
    ps = gen_random(5, 2, 0)
    with pytest.raises(InputError):
        greedy_tspanner(ps, 1.0)


def test_highd_k_zero_is_tree_of_greedy():
    for dim in (2, 3):
        ps = gen_random(40, dim, dim)
        res = sparse_spanner_highd(ps, 0, 2.0)
        want = mst_of_graph(greedy_tspanner(ps, 2.0))
        assert res.graph.edges == want.edges
        assert len(res.graph.edges) == 39


def test_highd_documented_instance():
    ps = gen_random(60, 3, 11)
    res = sparse_spanner_highd(ps, 10, 2.0)
    assert len(res.graph.edges) <= 69
    assert res.graph.is_connected()


def test_highd_budget_sweep():
    for n in (20, 50):
        for dim in (2, 3):
            ps = gen_random(n, dim, n + dim)
            for k in (0, 1, 5, n // 4, n - 1):
                res = sparse_spanner_highd(ps, k, 2.0)
                assert n - 1 <= len(res.graph.edges) <= n - 1 + k
                assert res.graph.is_connected()


def test_highd_result_composition():
    ps = gen_random(50, 3, 21)
    res = sparse_spanner_highd(ps, 11, 2.0)
    tree = mst_of_graph(greedy_tspanner(ps, 2.0))
    kept = set(tree.edges) - set(res.subtrees.removed_edges)
    assert set(res.graph.edges) == kept | set(res.inner_spanner_edges)
    assert set(res.X) == set(res.subtrees.boundary)
    for i, j in res.inner_spanner_edges:
        assert i in res.X and j in res.X
    assert res.max_degree == res.graph.max_degree()


def test_highd_degree_accounting():
    for seed in (0, 5):
        ps = gen_random(60, 3, seed)
        res = sparse_spanner_highd(ps, 9, 2.0)
        tdeg = mst_of_graph(greedy_tspanner(ps, 2.0)).degrees()
        gdeg = res.graph.degrees()
        inner = [0] * 60
        for i, j in res.inner_spanner_edges:
            inner[i] += 1
            inner[j] += 1
        bset = set(res.X)
        for v in range(60):
            if v not in bset:
                assert gdeg[v] == tdeg[v]
            else:
                assert gdeg[v] <= tdeg[v] - 1 + inner[v]


def test_highd_dilation_improves_with_budget():
    ps = gen_random(80, 3, 9)
    loose = dilation(sparse_spanner_highd(ps, 0, 2.0).graph).dilation
    tight = dilation(sparse_spanner_highd(ps, 40, 2.0).graph).dilation
    assert tight <= loose + 1e-9


def test_highd_deterministic():
    ps = gen_random(45, 3, 31)
    a = sparse_spanner_highd(ps, 7, 2.0)
    b = sparse_spanner_highd(ps, 7, 2.0)
    assert format_graph(a.graph) == format_graph(b.graph)
    assert a.X == b.X
    assert a.inner_spanner_edges == b.inner_spanner_edges


def test_highd_rejects_bad_params():
    ps = gen_random(10, 2, 0)
    with pytest.raises(InputError):
        sparse_spanner_highd(ps, -1, 2.0)
    with pytest.raises(InputError):
        sparse_spanner_highd(ps, 10, 2.0)
    with pytest.raises(InputError):
        sparse_spanner_highd(ps, 2, 1.0)
