"""Exact planar orientation and in-circle predicates.

Each predicate first evaluates in doubles with a forward error bound; only
results inside the uncertainty band are re-evaluated in exact rational
arithmetic (floats convert to Fraction without loss). ``incircle_indexed``
additionally breaks genuine cocircularity by an infinitesimal weight
perturbation ordered by vertex index, which makes the triangulation built on
top of it a unique function of the point set.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

_EPS = 2.0**-53
CCW_ERR_BOUND = (3.0 + 16.0 * _EPS) * _EPS
INCIRCLE_ERR_BOUND = (10.0 + 96.0 * _EPS) * _EPS

Coord = Sequence[float]


def _sign(x: float | Fraction) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def _orient2d_exact(pa: Coord, pb: Coord, pc: Coord) -> int:
    ax, ay = Fraction(pa[0]), Fraction(pa[1])
    bx, by = Fraction(pb[0]), Fraction(pb[1])
    cx, cy = Fraction(pc[0]), Fraction(pc[1])
    return _sign((ax - cx) * (by - cy) - (ay - cy) * (bx - cx))


def orient2d(pa: Coord, pb: Coord, pc: Coord) -> int:
    """Sign of twice the signed area of (pa, pb, pc); +1 if counterclockwise."""
    detleft = (pa[0] - pc[0]) * (pb[1] - pc[1])
    detright = (pa[1] - pc[1]) * (pb[0] - pc[0])
    det = detleft - detright
    if detleft > 0.0:
        if detright <= 0.0:
            return _sign(det)
        detsum = detleft + detright
    elif detleft < 0.0:
        if detright >= 0.0:
            return _sign(det)
        detsum = -detleft - detright
    else:
        return _sign(det)
    errbound = CCW_ERR_BOUND * detsum
    if det >= errbound or -det >= errbound:
        return _sign(det)
    return _orient2d_exact(pa, pb, pc)


def _incircle_exact(pa: Coord, pb: Coord, pc: Coord, pd: Coord) -> int:
    dx, dy = Fraction(pd[0]), Fraction(pd[1])
    adx, ady = Fraction(pa[0]) - dx, Fraction(pa[1]) - dy
    bdx, bdy = Fraction(pb[0]) - dx, Fraction(pb[1]) - dy
    cdx, cdy = Fraction(pc[0]) - dx, Fraction(pc[1]) - dy
    det = (
        (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
        + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy)
        + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady)
    )
    return _sign(det)


def incircle(pa: Coord, pb: Coord, pc: Coord, pd: Coord) -> int:
    """+1 if pd lies strictly inside the circle through pa, pb, pc (ccw order),
    -1 if strictly outside, 0 if exactly on it."""
    adx, ady = pa[0] - pd[0], pa[1] - pd[1]
    bdx, bdy = pb[0] - pd[0], pb[1] - pd[1]
    cdx, cdy = pc[0] - pd[0], pc[1] - pd[1]

    bdxcdy, cdxbdy = bdx * cdy, cdx * bdy
    alift = adx * adx + ady * ady
    cdxady, adxcdy = cdx * ady, adx * cdy
    blift = bdx * bdx + bdy * bdy
    adxbdy, bdxady = adx * bdy, bdx * ady
    clift = cdx * cdx + cdy * cdy

    det = (
        alift * (bdxcdy - cdxbdy)
        + blift * (cdxady - adxcdy)
        + clift * (adxbdy - bdxady)
    )
    permanent = (
        (abs(bdxcdy) + abs(cdxbdy)) * alift
        + (abs(cdxady) + abs(adxcdy)) * blift
        + (abs(adxbdy) + abs(bdxady)) * clift
    )
    errbound = INCIRCLE_ERR_BOUND * permanent
    if det > errbound or -det > errbound:
        return _sign(det)
    return _incircle_exact(pa, pb, pc, pd)


def incircle_indexed(
    coords: Sequence[Coord], ia: int, ib: int, ic: int, id_: int
) -> int:
    """In-circle test with symbolic tie-breaking by vertex index.

    Conceptually each point i carries a lifted-paraboloid offset -eps^(i+1)
    with eps infinitesimal, so on a cocircular quadruple the lowest index
    dominates. Expanding the lifted determinant along the offset column, the
    sign of the dominant term is -cofactor * orient2d(remaining rows). Three
    distinct cocircular points are never collinear, so the first minor tried
    is already nonzero and no deeper perturbation is needed.
    """
    s = incircle(coords[ia], coords[ib], coords[ic], coords[id_])
    if s:
        return s
    rows = (
        (ia, 1, (ib, ic, id_)),
        (ib, -1, (ia, ic, id_)),
        (ic, 1, (ia, ib, id_)),
        (id_, -1, (ia, ib, ic)),
    )
    for _, cof, (r, s2, t) in sorted(rows):
        m = orient2d(coords[r], coords[s2], coords[t])
        if m:
            return -cof * m
    return 0
