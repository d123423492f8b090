"""Acute spanning tours for even n >= 20, and the greedy acute path.

The tour is glued from a few short acute paths taken from three
quadruples and long paths that zigzag between opposite quadrants.  Every
angle on a zigzag is at most a right angle because both neighbours of a
vertex lie in the closed quadrant opposite to it.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Hashable, Optional, Sequence

import numpy as np

from .errors import InternalInvariantError, InvalidInputError, ParityError, UnsupportedSizeError
from .geometry import PointSet, as_pointset, nonobtuse_at, rotation_angle
from .partition import EquitablePartition, equitable_partition, frame_transform
from .quadruple import (
    DOWNWARD,
    HOOKS,
    LEFTWARD,
    RIGHTWARD,
    TYPES,
    UPWARD,
    Quadruple,
    classify_quadruple,
)

MIN_N = 20
ORACLE_MAX_N = 12
N_QUADRUPLES = 5

CASE1 = "case1"
CASE21 = "case2.1"
CASE22 = "case2.2"

# Quarter turns (as transform names) that bring a type to UPWARD.
_TO_UPWARD = {
    UPWARD: (),
    LEFTWARD: ("rotate90",),
    DOWNWARD: ("rotate180",),
    RIGHTWARD: ("rotate90", "rotate180"),
}


@dataclass(frozen=True)
class Tour:
    order: tuple[int, ...]
    max_angle: float
    acute: bool
    case_taken: str
    transforms_applied: tuple[str, ...] = ()
    partition: Optional[EquitablePartition] = field(default=None, repr=False, compare=False)


def validate_tour_input(points) -> PointSet:
    pts = as_pointset(points)
    n = len(pts)
    if n % 2:
        raise InvalidInputError(f"n={n} is odd; an acute tour need not exist for odd n")
    if n < 4:
        raise InvalidInputError(f"n={n} is too small for a tour")
    if n < MIN_N:
        raise UnsupportedSizeError(
            f"n={n}: the construction needs n >= {MIN_N}; "
            f"use the exhaustive oracle for n <= {ORACLE_MAX_N}"
        )
    return pts


def construct_acute_tour(points) -> Tour:
    """Acute spanning tour of an even number (>= 20) of distinct points."""
    pts = validate_tour_input(points)
    return build_tour(equitable_partition(pts))


# --------------------------------------------------------------------------
# paths


def alternating_path(
    start: Hashable,
    end: Hashable,
    side_a: Sequence,
    side_b: Sequence,
    second: Optional[Hashable] = None,
    penultimate: Optional[Hashable] = None,
) -> list:
    """Path from ``start`` to ``end`` alternating between two sides.

    ``start`` belongs to ``side_a``; ``end`` to either side.  Every element
    of both sides is visited once, interior elements in the order given.
    ``second`` and ``penultimate`` pin the first and last edges.
    """
    set_a, set_b = set(side_a), set(side_b)
    if start not in set_a:
        raise ParityError(f"start {start!r} is not on side A")
    if end in set_a:
        end_side = "a"
        if len(side_a) != len(side_b) + 1:
            raise ParityError(
                f"path ending on side A needs |A| = |B| + 1, got {len(side_a)} and {len(side_b)}"
            )
    elif end in set_b:
        end_side = "b"
        if len(side_a) != len(side_b):
            raise ParityError(
                f"path ending on side B needs |A| = |B|, got {len(side_a)} and {len(side_b)}"
            )
    else:
        raise ParityError(f"end {end!r} is on neither side")
    if second is not None and second not in set_b:
        raise ParityError(f"second vertex {second!r} is not on side B")
    if penultimate is not None:
        want = set_b if end_side == "a" else set_a
        if penultimate not in want:
            raise ParityError(f"penultimate vertex {penultimate!r} is on the wrong side")

    if end_side == "a":
        a_seq = _pinned(side_a, start, end)
        b_seq = _pinned(side_b, second, penultimate)
    else:
        a_seq = _pinned(side_a, start, penultimate)
        b_seq = _pinned(side_b, second, end)
    path = []
    for i, a in enumerate(a_seq):
        path.append(a)
        if i < len(b_seq):
            path.append(b_seq[i])
    return path


def _pinned(side: Sequence, first, last) -> list:
    if first is not None and first == last and len(side) > 1:
        raise ParityError(f"{first!r} cannot be both first and last of a side of {len(side)}")
    middle = [x for x in side if x != first and x != last]
    seq = ([first] if first is not None else []) + middle
    if last is not None and last != first:
        seq.append(last)
    if len(seq) != len(side):
        raise ParityError("pinned elements are not on their side")
    return seq


def farthest_point_acute_path(points, start_index: int = 0) -> list[int]:
    """Greedy spanning path: always jump to the farthest unvisited point.

    Squared distances are compared exactly; ties go to the smallest index.
    """
    pts = as_pointset(points)
    n = len(pts)
    if n < 2:
        raise InvalidInputError("a path needs at least two points")
    if not 0 <= start_index < n:
        raise InvalidInputError(f"start index {start_index} out of range")
    arr = pts.int64_array()
    if arr is not None:
        xs, ys = arr[:, 0].copy(), arr[:, 1].copy()
        used = np.zeros(n, dtype=bool)
        cur = start_index
        used[cur] = True
        path = [cur]
        for _ in range(n - 1):
            dx = xs - xs[cur]
            dy = ys - ys[cur]
            d = dx * dx + dy * dy
            d[used] = -1
            cur = int(np.argmax(d))
            used[cur] = True
            path.append(cur)
        return path
    remaining = set(range(n)) - {start_index}
    cur = start_index
    path = [cur]
    while remaining:
        cx, cy = pts[cur]
        cur = max(
            remaining, key=lambda i: ((pts[i].x - cx) ** 2 + (pts[i].y - cy) ** 2, -i)
        )
        remaining.discard(cur)
        path.append(cur)
    return path


# --------------------------------------------------------------------------
# construction


def select_quadruples(partition: EquitablePartition) -> list[Quadruple]:
    """Five quadruples from the five lowest points of each quadrant.

    "Lowest" is frame y, then frame x, then input index; the j-th lowest
    points of the four quadrants form quadruple j.  Ordering by height
    first keeps the choice unchanged under a left-right mirror.
    """
    frame = partition.frame
    arr = partition.points.int64_array()
    # Projections fit int64 when both coordinates and directions are below 2**30.
    if arr is not None and max(map(abs, frame.u + frame.v)) >= 2**30:
        arr = None
    if arr is not None:
        pu = arr @ np.array(frame.u, dtype=np.int64)
        pv = arr @ np.array(frame.v, dtype=np.int64)
    picks = []
    for q in (1, 2, 3, 4):
        members = partition.members(q)
        if len(members) < N_QUADRUPLES:
            raise InternalInvariantError(
                f"quadrant {q} has {len(members)} points, need {N_QUADRUPLES}"
            )
        if arr is not None:
            # Frame y and x are increasing in p.v and p.u, so rank by those.
            idx = np.asarray(members, dtype=np.intp)
            ranked = np.lexsort((idx, pu[idx], pv[idx]))[:N_QUADRUPLES]
            picks.append([int(i) for i in idx[ranked]])
            continue

        def key(i, _p=partition.points):
            fx, fy = frame.doubled_coords(_p[i])
            return (fy, fx, i)

        picks.append(heapq.nsmallest(N_QUADRUPLES, members, key=key))
    pts = partition.points
    quads = []
    for j in range(N_QUADRUPLES):
        idx = tuple(picks[q][j] for q in range(4))
        quads.append(classify_quadruple([pts[i] for i in idx], frame, idx))
    return quads


def _reindex(quads: Sequence[Quadruple], old: EquitablePartition, new: EquitablePartition):
    out = []
    for Q in quads:
        slots = [0, 0, 0, 0]
        for i in Q.indices:
            slots[new.labels[i] - 1] = i
        out.append(classify_quadruple([new.points[i] for i in slots], new.frame, slots))
    return out


def _find_pair(quads, first, second):
    for X in quads:
        if first in X.types:
            for Y in quads:
                if Y is not X and second in Y.types:
                    return X, Y
    return None


class _Builder:
    def __init__(self, partition: EquitablePartition):
        self.original = partition
        self.partition = partition
        self.transforms: list[str] = []
        self.case: Optional[str] = None
        self.quads: list[Quadruple] = []

    def apply(self, kind: str, quads):
        old = self.partition
        self.partition = frame_transform(old, kind)
        self.transforms.append(kind)
        return _reindex(quads, old, self.partition)

    def bundle(self) -> dict:
        part = self.partition
        return {
            "frame": {"u": part.frame.u, "v": part.frame.v, "cu": part.frame.cu, "cv": part.frame.cv},
            "sizes": part.sizes,
            "transforms_applied": list(self.transforms),
            "case_taken": self.case,
            "quadruples": [
                {
                    "indices": Q.indices,
                    "convexity": Q.convexity,
                    "center": Q.center,
                    "types": sorted(Q.types),
                }
                for Q in self.quads
            ],
        }

    def fail(self, message: str):
        raise InternalInvariantError(message, self.bundle())

    def run(self) -> list[int]:
        quads = select_quadruples(self.partition)
        self.quads = quads
        pair = _find_pair(quads, UPWARD, DOWNWARD)
        if pair is not None:
            return self.case1(*pair)
        pair = _find_pair(quads, LEFTWARD, RIGHTWARD)
        if pair is not None:
            X, Y = pair
            pos = (quads.index(X), quads.index(Y))
            quads = self.apply("rotate90", quads)
            self.quads = quads
            return self.case1(quads[pos[0]], quads[pos[1]])
        for kind in TYPES:
            ends = (HOOKS[kind][0], HOOKS[kind][-1])
            chosen = [
                Q for Q in quads if Q.wide_center and kind in Q.types and Q.center in ends
            ]
            if len(chosen) >= 3:
                break
        else:
            self.fail("no opposite pair and no three wide-centered quadruples of one type")
        chosen = chosen[:3]
        for t in _TO_UPWARD[kind]:
            chosen = self.apply(t, chosen)
        self.quads = chosen
        return self.case2(chosen)

    # -- case 1 ------------------------------------------------------------

    def case1(self, P: Quadruple, Q: Quadruple) -> list[int]:
        if UPWARD not in P.types or DOWNWARD not in Q.types or P is Q:
            self.fail("case 1 needs an upward and a distinct downward quadruple")
        self.case = CASE1
        S = {q: self.partition.members(q) for q in (1, 2, 3, 4)}
        p1, p2, p3, p4 = P.indices
        q1, q2, q3, q4 = Q.indices
        s24 = alternating_path(
            p2, q4, [i for i in S[2] if i != q2], [i for i in S[4] if i != p4]
        )
        s31 = alternating_path(
            q3, p1, [i for i in S[3] if i != p3], [i for i in S[1] if i != q1]
        )
        return [p1, p3, p4] + s24 + [q2, q1] + s31[:-1]

    # -- case 2 ------------------------------------------------------------

    def case2(self, quads: list[Quadruple]) -> list[int]:
        for X in quads:
            if not X.wide_center or UPWARD not in X.types:
                self.fail("case 2 needs three upward wide-centered quadruples")
            if X.center not in (1, 2):
                self.fail(f"center of an upward concave-obtuse quadruple in quadrant {X.center}")
        if sum(X.center == 1 for X in quads) >= 2:
            quads = self.apply("reflect_swap_12_34", quads)
            self.quads = quads
        in_two = [X for X in quads if X.center == 2]
        if len(in_two) < 2:
            self.fail("fewer than two centers in quadrant 2 after reflection")
        frame, pts = self.partition.frame, self.partition.points

        def height(X):
            fx, fy = frame.doubled_coords(pts[X.idx(2)])
            return (fy, X.idx(2))

        P, Q = sorted(in_two[:2], key=height)
        R = next(X for X in quads if X is not P and X is not Q)
        S = {q: self.partition.members(q) for q in (1, 2, 3, 4)}
        p1, p2, p3, p4 = P.indices
        q1, q2, q3, q4 = Q.indices
        r1, r2, r3, r4 = R.indices
        head = [p1, p2, q1, q3]
        if R.center == 1:
            self.case = CASE21
            s42 = alternating_path(
                q4, r2, [i for i in S[4] if i != r4], [i for i in S[2] if i != p2], second=q2
            )
            s31 = alternating_path(
                r3,
                p1,
                [i for i in S[3] if i != q3],
                [i for i in S[1] if i != q1],
                second=r1,
                penultimate=p3,
            )
            return head + s42 + [r4] + s31[:-1]
        self.case = CASE22
        s424 = alternating_path(
            q4, r4, S[4], [i for i in S[2] if i != p2], second=q2, penultimate=r2
        )
        s131 = alternating_path(
            r1,
            p1,
            [i for i in S[1] if i != q1],
            [i for i in S[3] if i != q3 and i != r3],
            penultimate=p3,
        )
        return head + s424 + [r3] + s131[:-1]


def build_tour(partition: EquitablePartition) -> Tour:
    """Assemble and exactly verify the tour for a precomputed partition.

    Linear in n.  Raises InternalInvariantError, with a diagnostic bundle,
    if the result is not an acute Hamiltonian cycle.
    """
    pts = partition.points
    n = len(pts)
    if n < MIN_N or n % 2:
        validate_tour_input(pts)
    builder = _Builder(partition)
    order = builder.run()
    if len(order) != n or len(set(order)) != n:
        builder.fail(f"assembled sequence of length {len(order)} is not a permutation of {n}")
    bad, worst = _first_obtuse(pts, order)
    if bad is not None:
        bundle = builder.bundle()
        bundle["order"] = order
        bundle["vertex"] = order[bad]
        raise InternalInvariantError(
            f"obtuse rotation angle at vertex {order[bad]} (position {bad})", bundle
        )
    return Tour(
        order=tuple(order),
        max_angle=worst,
        acute=True,
        case_taken=builder.case,
        transforms_applied=tuple(builder.transforms),
        partition=partition,
    )


def _first_obtuse(pts: PointSet, order: Sequence[int]):
    """(position of the first obtuse vertex or None, largest angle) of a cycle."""
    n = len(order)
    arr = pts.int64_array()
    if arr is not None:
        cur = arr[np.asarray(order, dtype=np.intp)]
        a = np.roll(cur, 1, axis=0) - cur
        c = np.roll(cur, -1, axis=0) - cur
        dot = a[:, 0] * c[:, 0] + a[:, 1] * c[:, 1]
        cross = a[:, 0] * c[:, 1] - a[:, 1] * c[:, 0]
        neg = np.flatnonzero(dot < 0)
        if len(neg):
            return int(neg[0]), math.nan
        return None, float(np.arctan2(np.abs(cross), dot).max())
    worst = 0.0
    for k in range(n):
        a, b, c = pts[order[k - 1]], pts[order[k]], pts[order[(k + 1) % n]]
        if not nonobtuse_at(b, a, c):
            return k, math.nan
        worst = max(worst, rotation_angle(a, b, c))
    return None, worst


def rotation_angles(points, order: Sequence[int]) -> list[float]:
    pts = as_pointset(points)
    n = len(order)
    return [
        rotation_angle(pts[order[k - 1]], pts[order[k]], pts[order[(k + 1) % n]])
        for k in range(n)
    ]


__all__ = [
    "CASE1",
    "CASE21",
    "CASE22",
    "Tour",
    "alternating_path",
    "build_tour",
    "construct_acute_tour",
    "farthest_point_acute_path",
    "select_quadruples",
]
