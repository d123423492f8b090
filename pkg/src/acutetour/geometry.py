"""Exact planar kernel.

All coordinates are Python ints, so dot and cross products never overflow
and every acuteness decision is exact.  Floats appear only in
:func:`rotation_angle`, which exists for reporting.
"""

from __future__ import annotations

import enum
import math
from typing import Iterable, NamedTuple, Sequence

from .errors import DegenerateInputError, InvalidInputError


class Point(NamedTuple):
    x: int
    y: int

    def __sub__(self, other):  # type: ignore[override]
        return Point(self.x - other.x, self.y - other.y)

    def dot(self, other: "Point") -> int:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point") -> int:
        return self.x * other.y - self.y * other.x


class Orientation(enum.IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


class TriangleLocation(enum.Enum):
    STRICTLY_INSIDE = "strictly_inside"
    ON_BOUNDARY = "on_boundary"
    OUTSIDE = "outside"


class PointSet(Sequence[Point]):
    """Immutable sequence of pairwise distinct integer points.

    Position in the sequence is the input index; tours are reported as
    permutations of these indices.
    """

    __slots__ = ("_points", "_array")

    def __init__(self, points: Iterable[Sequence[int]]):
        pts = []
        for p in points:
            x, y = p
            if not isinstance(x, int) or not isinstance(y, int):
                raise InvalidInputError(f"coordinates must be integers, got {p!r}")
            pts.append(Point(x, y))
        if len(set(pts)) != len(pts):
            seen = {}
            for i, p in enumerate(pts):
                if p in seen:
                    raise InvalidInputError(
                        f"duplicate point {tuple(p)} at indices {seen[p]} and {i}"
                    )
                seen[p] = i
        self._points = tuple(pts)
        self._array = None

    def __len__(self) -> int:
        return len(self._points)

    def __getitem__(self, i):
        return self._points[i]

    def __iter__(self):
        return iter(self._points)

    def __repr__(self) -> str:
        return f"PointSet(n={len(self._points)})"

    @property
    def n(self) -> int:
        return len(self._points)

    @property
    def points(self) -> tuple[Point, ...]:
        return self._points

    def int64_array(self):
        """``(n, 2)`` int64 copy of the coordinates, or None if they may overflow.

        Coordinates below 2**30 in absolute value keep every dot product of
        two difference vectors inside int64.
        """
        if self._array is None:
            import numpy as np

            from itertools import chain

            try:
                arr = np.fromiter(
                    chain.from_iterable(self._points), dtype=np.int64, count=2 * len(self._points)
                ).reshape(-1, 2)
            except OverflowError:
                arr = None
            if arr is not None and (arr.size == 0 or int(np.abs(arr).max()) < 2**30):
                self._array = arr
            else:
                self._array = False
        return self._array if self._array is not False else None

    def max_abs_coord(self) -> int:
        if not self._points:
            return 0
        return max(max(abs(p.x), abs(p.y)) for p in self._points)


def as_pointset(points) -> PointSet:
    return points if isinstance(points, PointSet) else PointSet(points)


def nonobtuse_at(apex, a, b) -> bool:
    """True iff the angle a-apex-b is at most a right angle (inclusive)."""
    ax = a[0] - apex[0]
    ay = a[1] - apex[1]
    bx = b[0] - apex[0]
    by = b[1] - apex[1]
    if (ax == 0 and ay == 0) or (bx == 0 and by == 0):
        raise DegenerateInputError(f"point coincides with apex {tuple(apex)}")
    return ax * bx + ay * by >= 0


def orientation(p, q, r) -> Orientation:
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    if d > 0:
        return Orientation.COUNTERCLOCKWISE
    if d < 0:
        return Orientation.CLOCKWISE
    return Orientation.COLLINEAR


def point_in_triangle(s, a, b, c) -> TriangleLocation:
    """Locate ``s`` relative to the closed triangle ``abc`` (either winding)."""
    o1 = orientation(a, b, s)
    o2 = orientation(b, c, s)
    o3 = orientation(c, a, s)
    signs = {o1, o2, o3}
    if Orientation.CLOCKWISE in signs and Orientation.COUNTERCLOCKWISE in signs:
        return TriangleLocation.OUTSIDE
    if Orientation.COLLINEAR not in signs:
        return TriangleLocation.STRICTLY_INSIDE
    # Some sign is zero: s is on a supporting line.  It is on the boundary
    # only if it also lies within the segment's bounding box.
    for o, (u, v) in zip((o1, o2, o3), ((a, b), (b, c), (c, a))):
        if o == Orientation.COLLINEAR and _within_box(s, u, v):
            return TriangleLocation.ON_BOUNDARY
    return TriangleLocation.OUTSIDE


def _within_box(s, u, v) -> bool:
    return min(u[0], v[0]) <= s[0] <= max(u[0], v[0]) and min(u[1], v[1]) <= s[1] <= max(
        u[1], v[1]
    )


def rotation_angle(prev, at, nxt) -> float:
    """Angle in [0, pi] between segments at-prev and at-next, for display."""
    ax = prev[0] - at[0]
    ay = prev[1] - at[1]
    bx = nxt[0] - at[0]
    by = nxt[1] - at[1]
    if (ax == 0 and ay == 0) or (bx == 0 and by == 0):
        raise DegenerateInputError(f"point coincides with {tuple(at)}")
    return math.atan2(abs(ax * by - ay * bx), ax * bx + ay * by)


def angle_from_dot_cross(dot: int, cross: int) -> float:
    return math.atan2(abs(cross), dot)


def squared_distance(p, q) -> int:
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    return dx * dx + dy * dy
