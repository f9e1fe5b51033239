from __future__ import annotations

import math

import pytest

from geospan.bounded_spread import bounded_spread_spanner, iroot
from geospan.core import InputError, PointSet, spread
from geospan.generators import gen_random
from geospan.geograph import dilation, format_graph


def _grid(r: int) -> PointSet:
    return PointSet.from_coords(
        [(float(x), float(y)) for x in range(r) for y in range(r)]
    )


def test_iroot_exact():
    assert iroot(0, 2) == 0
    assert iroot(8, 2) == 2
    assert iroot(9, 2) == 3
    assert iroot(26, 3) == 2
    assert iroot(27, 3) == 3
    # no float drift on perfect powers
    assert iroot(10**18, 2) == 10**9
    assert iroot((7**5) ** 3 - 1, 3) == 7**5 - 1


def test_small_k_star():
    ps = gen_random(30, 3, 1)
    for k in (0, 1, 2):
        g = bounded_spread_spanner(ps, k)
        assert g.edges == tuple((0, i) for i in range(1, 30))


def test_star_dilation_at_most_twice_spread():
    for seed in range(5):
        ps = gen_random(40, 2, seed)
        g = bounded_spread_spanner(ps, 0)
        assert dilation(g).dilation <= 2.0 * spread(ps) + 1e-9


def test_single_point():
    g = bounded_spread_spanner(PointSet.from_coords([(0.0, 1.0)]), 0)
    assert g.edges == ()


def test_grid_instance_budget():
    # 16x16 grid, k=10: m=3, at most nine representatives
    ps = _grid(16)
    g = bounded_spread_spanner(ps, 10)
    assert len(g.edges) <= 256 + 9
    assert g.is_connected()


def test_budget_sweep():
    for n in (20, 50):
        for dim in (2, 3):
            ps = gen_random(n, dim, n * dim)
            for k in (0, 1, 5, n // 4, n - 1):
                g = bounded_spread_spanner(ps, k)
                assert n - 1 <= len(g.edges) <= n - 1 + k
                assert g.is_connected()


def test_proof_chain_dilation_bound():
    t = 2.0
    for r, ks in ((8, (4, 10, 17)), (16, (10, 24))):
        ps = _grid(r)
        s = spread(ps)
        for k in ks:
            m = iroot(k - 1, 2)
            cap = (1.0 + t) * 2.0 * math.sqrt(2.0) * (s / m) + t
            d = dilation(bounded_spread_spanner(ps, k, t)).dilation
            assert d <= cap + 1e-9


def test_proof_chain_dilation_bound_random_3d():
    t = 2.0
    ps = gen_random(60, 3, 3)
    s = spread(ps)
    for k in (9, 28, 59):
        m = iroot(k - 1, 3)
        cap = (1.0 + t) * 2.0 * math.sqrt(3.0) * (s / m) + t
        d = dilation(bounded_spread_spanner(ps, k, t)).dilation
        assert d <= cap + 1e-9


def test_cell_structure():
    # reconstruct the bucketing and check the star wiring
    ps = gen_random(50, 2, 44)
    k = 17
    g = bounded_spread_spanner(ps, k)
    m = iroot(k - 1, 2)
    pts = [tuple(p) for p in ps]
    side = max(
        math.dist(pts[i], pts[j])
        for i in range(50)
        for j in range(i + 1, 50)
    )
    lo = [min(p[a] for p in pts) for a in range(2)]
    cell_w = side / m

    def cell(p):
        return tuple(
            min(int((p[a] - lo[a]) / cell_w), m - 1) for a in range(2)
        )

    reps = {}
    for idx, p in enumerate(pts):
        reps.setdefault(cell(p), idx)  # lowest index wins
    rep_set = set(reps.values())
    adjacency = {v: set() for v in range(50)}
    for i, j in g.edges:
        adjacency[i].add(j)
        adjacency[j].add(i)
    for idx, p in enumerate(pts):
        if idx in rep_set:
            continue
        assert reps[cell(p)] in adjacency[idx]
    # intra-cell star edges no longer than the cell diagonal
    for idx, p in enumerate(pts):
        r = reps[cell(p)]
        if r != idx:
            assert math.dist(p, pts[r]) <= math.sqrt(2.0) * cell_w + 1e-9


def test_deterministic():
    ps = gen_random(40, 2, 13)
    assert format_graph(bounded_spread_spanner(ps, 9)) == format_graph(
        bounded_spread_spanner(ps, 9)
    )


def test_rejects_bad_params():
    ps = gen_random(10, 2, 0)
    with pytest.raises(InputError):
        bounded_spread_spanner(ps, -1)
    with pytest.raises(InputError):
        bounded_spread_spanner(ps, 10)
    with pytest.raises(InputError):
        bounded_spread_spanner(ps, 4, t=0.5)
