"""Quadruples (one point per quadrant) and their hook types."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .errors import InternalInvariantError, PreconditionError
from .geometry import TriangleLocation, nonobtuse_at, point_in_triangle
from .partition import OrthoFrame, opposite

CONVEX = "convex"
CONCAVE_ACUTE = "concave_acute"
CONCAVE_OBTUSE = "concave_obtuse"

UPWARD = "upward"
DOWNWARD = "downward"
LEFTWARD = "leftward"
RIGHTWARD = "rightward"
TYPES = (UPWARD, DOWNWARD, LEFTWARD, RIGHTWARD)

# Hook paths as quadrant labels.  A quadruple has a type when its hook is
# an acute path.
HOOKS = {
    UPWARD: (2, 4, 3, 1),
    DOWNWARD: (3, 1, 2, 4),
    LEFTWARD: (2, 4, 1, 3),
    RIGHTWARD: (1, 3, 2, 4),
}

OPPOSITE_TYPE = {UPWARD: DOWNWARD, DOWNWARD: UPWARD, LEFTWARD: RIGHTWARD, RIGHTWARD: LEFTWARD}


def is_acute_path(path: Sequence) -> bool:
    """True iff every interior angle of ``path`` is at most a right angle."""
    for a, b, c in zip(path, path[1:], path[2:]):
        if not nonobtuse_at(b, a, c):
            return False
    return True


@dataclass(frozen=True)
class Quadruple:
    """Points p1..p4 with p_i in closed quadrant i.

    ``indices`` are input indices (or None for free-standing quadruples);
    ``center`` is the quadrant label of the center for concave quadruples.
    ``wide_center`` says the quadruple is concave and no angle at its
    center is smaller than a right angle.  That holds for every
    concave-obtuse quadruple, and also for degenerate concave-acute ones
    whose only non-obtuse center angle is exactly right.
    """

    points: tuple
    indices: Optional[tuple[int, int, int, int]]
    convexity: str
    center: Optional[int]
    types: frozenset
    wide_center: bool = False

    def p(self, i: int):
        return self.points[i - 1]

    def idx(self, i: int) -> int:
        assert self.indices is not None
        return self.indices[i - 1]

    def hook(self, kind: str) -> tuple:
        return tuple(self.points[i - 1] for i in HOOKS[kind])

    @property
    def vertical(self) -> bool:
        return bool(self.types & {UPWARD, DOWNWARD})

    @property
    def horizontal(self) -> bool:
        return bool(self.types & {LEFTWARD, RIGHTWARD})


def find_center(pts) -> Optional[int]:
    """Quadrant label of a point lying in the closed triangle of the others.

    A strictly interior point wins; among boundary cases the lowest label
    wins.
    """
    boundary = None
    for i in range(4):
        others = [pts[j] for j in range(4) if j != i]
        loc = point_in_triangle(pts[i], *others)
        if loc is TriangleLocation.STRICTLY_INSIDE:
            return i + 1
        if loc is TriangleLocation.ON_BOUNDARY and boundary is None:
            boundary = i + 1
    return boundary


def classify_quadruple(pts, frame: Optional[OrthoFrame] = None, indices=None) -> Quadruple:
    """Classify four points given in quadrant order p1, p2, p3, p4.

    With a ``frame`` the closed-quadrant precondition is checked exactly.
    """
    pts = tuple(tuple(p) for p in pts)
    if len(pts) != 4:
        raise PreconditionError("a quadruple has four points")
    if len(set(pts)) != 4:
        raise PreconditionError(f"quadruple points must be distinct: {pts}")
    if frame is not None:
        for i, p in enumerate(pts, start=1):
            if not frame.in_quadrant(p, i):
                raise PreconditionError(f"p{i}={p} is not in closed quadrant {i}")

    center = find_center(pts)
    wide = False
    if center is None:
        convexity = CONVEX
    else:
        s = pts[center - 1]
        others = [pts[j] for j in range(4) if j != center - 1]
        dots = [_dot(s, a, b) for a, b in combinations(others, 2)]
        convexity = CONCAVE_ACUTE if max(dots) >= 0 else CONCAVE_OBTUSE
        wide = max(dots) <= 0

    types = frozenset(
        kind for kind, hook in HOOKS.items() if is_acute_path([pts[i - 1] for i in hook])
    )
    if not types:
        raise InternalInvariantError(
            f"quadruple {pts} has no hook type",
            {"points": pts, "convexity": convexity, "center": center},
        )
    return Quadruple(
        pts, tuple(indices) if indices is not None else None, convexity, center, types, wide
    )


def _dot(apex, a, b) -> int:
    return (a[0] - apex[0]) * (b[0] - apex[0]) + (a[1] - apex[1]) * (b[1] - apex[1])


def opposite_quadrant_acute(p, q, r, frame: OrthoFrame) -> bool:
    """Angle q-p-r for q, r in the closed quadrant opposite to p's.

    Always true for valid input; the call exists to assert it.
    """
    for quad in frame.quadrants_of(p):
        o = opposite(quad)
        if frame.in_quadrant(q, o) and frame.in_quadrant(r, o):
            return nonobtuse_at(p, q, r)
    raise PreconditionError(
        f"{tuple(q)} and {tuple(r)} are not both opposite to the quadrant of {tuple(p)}"
    )
