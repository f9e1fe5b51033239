"""Points, point sets, and the pairwise-distance quantities built on them.

Coordinates are plain double precision floats. Derived quantities elsewhere
in the package are compared with the relative tolerance ``EPS_REL``; the
constructions this package targets are well conditioned at that scale, so no
interval or rational arithmetic is needed outside the planar predicates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

EPS_REL = 1e-9


class InputError(ValueError):
    """An argument violates an operation's contract."""


@dataclass(frozen=True)
class Point:
    """Immutable point in R^D, D >= 1, all coordinates finite."""

    coords: tuple[float, ...]

    def __post_init__(self) -> None:
        coords = tuple(float(c) for c in self.coords)
        if not coords:
            raise InputError("a point needs at least one coordinate")
        for c in coords:
            if not math.isfinite(c):
                raise InputError(f"non-finite coordinate in {coords!r}")
        object.__setattr__(self, "coords", coords)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[float]:
        return iter(self.coords)

    def __getitem__(self, i: int) -> float:
        return self.coords[i]


def distance(p: Point, q: Point) -> float:
    """Euclidean distance between two points of equal dimension."""
    if p.dim != q.dim:
        raise InputError(f"dimension mismatch: {p.dim} vs {q.dim}")
    return math.dist(p.coords, q.coords)


@dataclass(frozen=True)
class PointSet:
    """Non-empty tuple of pairwise distinct points sharing one dimension.

    Distinctness is exact coordinate equality; it is required so that the
    dilation of a connected graph over the set is always finite.
    """

    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        points = tuple(
            p if isinstance(p, Point) else Point(tuple(p)) for p in self.points
        )
        if not points:
            raise InputError("point set must not be empty")
        dim = points[0].dim
        for p in points:
            if p.dim != dim:
                raise InputError("all points must share one dimension")
        if len({p.coords for p in points}) != len(points):
            raise InputError("duplicate points are not allowed")
        object.__setattr__(self, "points", points)

    @classmethod
    def from_coords(cls, rows: Iterable[Sequence[float]]) -> "PointSet":
        return cls(tuple(Point(tuple(r)) for r in rows))

    @property
    def dim(self) -> int:
        return self.points[0].dim

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def as_array(self) -> np.ndarray:
        """n x D float array view of the set (cached, read-only)."""
        arr = getattr(self, "_array", None)
        if arr is None:
            arr = np.array([p.coords for p in self.points], dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, "_array", arr)
        return arr

    def subset(self, indices: Sequence[int]) -> "PointSet":
        return PointSet(tuple(self.points[i] for i in indices))


def spread(ps: PointSet) -> float:
    """Max over min pairwise distance, computed by brute force over all pairs.

    Scale free and at least 1 for any valid input.
    """
    if len(ps) < 2:
        raise InputError("spread needs at least two points")
    a = ps.as_array()
    diff = a[:, None, :] - a[None, :, :]
    d2 = np.einsum("ijk,ijk->ij", diff, diff)
    iu = np.triu_indices(len(ps), 1)
    vals = d2[iu]
    dmin = float(vals.min())
    if dmin <= 0.0:
        raise InputError("duplicate points have no finite spread")
    return math.sqrt(float(vals.max()) / dmin)


@dataclass(frozen=True)
class SpannerParams:
    """Bundle of knobs shared by the builders.

    k is the edge budget above a spanning tree, t the stretch target of the
    greedy base spanner, eps_rel the comparison tolerance, seed the source of
    all randomness.
    """

    k: int = 0
    t: float = 2.0
    eps_rel: float = EPS_REL
    seed: int = 0

    def __post_init__(self) -> None:
        if self.k < 0:
            raise InputError("k must be >= 0")
        if not self.t > 1.0:
            raise InputError("t must be > 1")
        if not self.eps_rel > 0.0:
            raise InputError("eps_rel must be > 0")


# Point-set text format: first non-comment line "D n", then n lines with D
# space separated decimals. '#' starts a comment line. The writer uses the
# shortest decimal rendering that parses back to the same double.

def format_points(ps: PointSet) -> str:
    lines = [f"{ps.dim} {len(ps)}"]
    lines.extend(" ".join(repr(c) for c in p.coords) for p in ps)
    return "\n".join(lines) + "\n"


def parse_points(text: str) -> PointSet:
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise InputError("empty point-set file")
    lineno, head = rows[0]
    parts = head.split()
    if len(parts) != 2:
        raise InputError(f"line {lineno}: expected header 'D n'")
    try:
        dim, n = int(parts[0]), int(parts[1])
    except ValueError:
        raise InputError(f"line {lineno}: expected integer header 'D n'") from None
    if len(rows) - 1 != n:
        raise InputError(f"expected {n} point lines, found {len(rows) - 1}")
    pts = []
    for lineno, line in rows[1:]:
        fields = line.split()
        if len(fields) != dim:
            raise InputError(f"line {lineno}: expected {dim} coordinates")
        try:
            coords = tuple(float(x) for x in fields)
        except ValueError:
            raise InputError(f"line {lineno}: malformed coordinate") from None
        pts.append(Point(coords))
    return PointSet(tuple(pts))


def save_points(ps: PointSet, path: str | Path) -> None:
    Path(path).write_text(format_points(ps), encoding="ascii")


def load_points(path: str | Path) -> PointSet:
    return parse_points(Path(path).read_text(encoding="ascii"))
