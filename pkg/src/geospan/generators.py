"""Point-set generators: the adversarial families used by the lower-bound
arguments, plus grid and uniform-random instances for measurements.

Every generator is deterministic; ``gen_random`` takes an explicit seed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .core import InputError, Point, PointSet


def gen_circle(n: int) -> PointSet:
    """n points equally spaced on the unit circle.

    Point i is (cos(2*pi*i/n), sin(2*pi*i/n)).
    """
    if n < 2:
        raise InputError("gen_circle needs n >= 2")
    step = 2.0 * math.pi / n
    return PointSet(
        tuple(Point((math.cos(step * i), math.sin(step * i))) for i in range(n))
    )


def gen_multi_circle(n: int, k: int) -> PointSet:
    """n points split over k+1 unit circles centered at (2n*i, 0), i=1..k+1.

    The first n mod (k+1) circles carry ceil(n/(k+1)) points, the rest
    floor(n/(k+1)). Any two circles are at least 2n-2 apart, which dwarfs
    every intra-circle distance (at most 2).
    """
    if not 0 < k < n:
        raise InputError("gen_multi_circle needs 0 < k < n")
    if n // (k + 1) < 2:
        raise InputError("gen_multi_circle needs floor(n/(k+1)) >= 2")
    q, r = divmod(n, k + 1)
    pts: list[Point] = []
    for i in range(1, k + 2):
        cx = 2.0 * n * i
        size = q + 1 if i <= r else q
        step = 2.0 * math.pi / size
        pts.extend(
            Point((cx + math.cos(step * j), math.sin(step * j))) for j in range(size)
        )
    return PointSet(tuple(pts))


def convex_rect_m(n: int) -> int:
    """Number of geometric steps m = floor(n/4 - 1/2) of the convex family."""
    if n < 10:
        raise InputError("gen_convex_rect needs n >= 10")
    return (n - 2) // 4


def convex_rect_f(i: int, m: int) -> float:
    """Horizontal spacing function f(i) = (1 + ln(m)/m)^i - 1."""
    return (1.0 + math.log(m) / m) ** i - 1.0


def gen_convex_rect(n: int) -> PointSet:
    """Convex position set with geometrically stretched x-spacing.

    With m = floor(n/4 - 1/2), the points are (+-f(i), +-1) for i = 0..m
    where f(i) = (1 + ln(m)/m)^i - 1; the four copies of i = 0 collapse to
    (0, 1) and (0, -1), so exactly 4m + 2 points come out. Points are
    returned in lexicographic coordinate order.
    """
    m = convex_rect_m(n)
    coords = {(0.0, 1.0), (0.0, -1.0)}
    for i in range(1, m + 1):
        f = convex_rect_f(i, m)
        coords.update({(f, 1.0), (f, -1.0), (-f, 1.0), (-f, -1.0)})
    return PointSet(tuple(Point(c) for c in sorted(coords)))


@dataclass(frozen=True)
class GridSquaresSpec:
    """Parameters of the D-dimensional grid family with marked squares.

    The grid {0..r-1}^D is cut into m^D blocks of side 4*sigma,
    sigma = floor(r/(4m)). Block x carries an axis-parallel square
    Q(x) = ({sigma..3*sigma}^2 x {2*sigma}^(D-2)) + 4*sigma*x whose 8*sigma
    boundary grid points are always included; the set is then filled with the
    lexicographically first unused grid points up to n.
    """

    r: int
    m: int
    n: int
    dim: int = 2

    def __post_init__(self) -> None:
        if self.r < 4:
            raise InputError("grid squares need r >= 4")
        if self.dim < 2:
            raise InputError("grid squares need dimension >= 2")
        if not 1 <= self.m or 4 * self.m > self.r:
            raise InputError("grid squares need 1 <= m <= r/4")
        lo = 2 * self.r * self.m ** (self.dim - 1)
        hi = self.r**self.dim
        if not lo <= self.n <= hi:
            raise InputError(f"grid squares need {lo} <= n <= {hi}")

    @property
    def sigma(self) -> int:
        return self.r // (4 * self.m)


def _square_boundary(sigma: int) -> list[tuple[int, int]]:
    lo, hi = sigma, 3 * sigma
    cells = [
        (a, b)
        for a in range(lo, hi + 1)
        for b in range(lo, hi + 1)
        if a in (lo, hi) or b in (lo, hi)
    ]
    return sorted(cells)


def gen_grid_squares(spec: GridSquaresSpec) -> PointSet:
    """Grid instance realizing the marked-squares lower-bound family."""
    sigma, r, m, d = spec.sigma, spec.r, spec.m, spec.dim
    boundary = _square_boundary(sigma)
    chosen: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for block in itertools.product(range(m), repeat=d):
        base = tuple(4 * sigma * x for x in block)
        mid = tuple(2 * sigma + base[axis] for axis in range(2, d))
        for a, b in boundary:
            pt = (a + base[0], b + base[1]) + mid
            if pt not in seen:
                seen.add(pt)
                chosen.append(pt)
    if len(chosen) > spec.n:
        raise InputError("square boundaries alone exceed n")  # spec invariants forbid this
    for pt in itertools.product(range(r), repeat=d):
        if len(chosen) == spec.n:
            break
        if pt not in seen:
            seen.add(pt)
            chosen.append(pt)
    return PointSet.from_coords([tuple(float(c) for c in pt) for pt in chosen])


def gen_random(n: int, dim: int, seed: int) -> PointSet:
    """n points drawn uniformly from [0,1]^dim, deterministic in seed."""
    if n < 1:
        raise InputError("gen_random needs n >= 1")
    if dim < 1:
        raise InputError("gen_random needs dim >= 1")
    rng = np.random.default_rng(seed)
    rows = rng.random((n, dim))
    seen = {tuple(row) for row in rows}
    while len(seen) < n:  # collisions are essentially impossible, but stay safe
        rows = rng.random((n, dim))
        seen = {tuple(row) for row in rows}
    return PointSet.from_coords(rows.tolist())
