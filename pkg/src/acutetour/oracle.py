"""Exhaustive min-max rotation angle search for small point sets.

Angles are ranked exactly: the angle at b between a and c is determined by
the sign of the dot product d and by d^2 / (|ba|^2 |bc|^2), so two angles
compare with integer arithmetic alone.  Floats appear only when the
winning rank is reported in radians.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidInputError
from .geometry import as_pointset

MIN_N = 3
MAX_N = 12


@dataclass(frozen=True)
class OracleResult:
    best_order: tuple[int, ...]
    min_max_angle: float
    acute_tour_exists: bool


def angle_key(a, b, c):
    """Sort key that orders the angle a-b-c exactly, smallest first."""
    ax, ay = a[0] - b[0], a[1] - b[1]
    cx, cy = c[0] - b[0], c[1] - b[1]
    d = ax * cx + ay * cy
    if d > 0:
        return (0, -Fraction(d * d, (ax * ax + ay * ay) * (cx * cx + cy * cy)))
    if d == 0:
        return (1, 0)
    return (2, Fraction(d * d, (ax * ax + ay * ay) * (cx * cx + cy * cy)))


class _AngleTable:
    def __init__(self, pts):
        n = len(pts)
        self.pts = pts
        keys = {}
        for b in range(n):
            for a in range(n):
                for c in range(a + 1, n):
                    if a != b and c != b:
                        keys[(a, b, c)] = angle_key(pts[a], pts[b], pts[c])
        distinct = sorted(set(keys.values()))
        rank_of = {k: r for r, k in enumerate(distinct)}
        right = rank_of.get((1, 0))
        if right is None:
            # Largest rank that is still acute, for the exact acuteness test.
            right = sum(1 for k in distinct if k[0] == 0) - 1
        self.right_rank = right
        self.rank = [[[-1] * n for _ in range(n)] for _ in range(n)]
        for (a, b, c), k in keys.items():
            r = rank_of[k]
            self.rank[a][b][c] = r
            self.rank[c][b][a] = r

    def radians(self, a, b, c) -> float:
        p, q, r = self.pts[a], self.pts[b], self.pts[c]
        ax, ay = p[0] - q[0], p[1] - q[1]
        cx, cy = r[0] - q[0], r[1] - q[1]
        return math.atan2(abs(ax * cy - ay * cx), ax * cx + ay * cy)


def _validate(points):
    pts = as_pointset(points)
    if not MIN_N <= len(pts) <= MAX_N:
        raise InvalidInputError(
            f"exhaustive search supports {MIN_N} <= n <= {MAX_N}, got n={len(pts)}"
        )
    return pts


def exhaustive_min_max_tour(points) -> OracleResult:
    """Tour minimising the largest rotation angle, over all Hamiltonian cycles.

    Cycles are enumerated from vertex 0 with the second vertex smaller than
    the last one, so each undirected cycle is seen once; among optimal
    cycles the lexicographically smallest such order is returned.
    """
    pts = _validate(points)
    n = len(pts)
    table = _AngleTable(pts)
    rank = table.rank
    best = [math.inf, None]
    order = [0] * n

    def extend(depth, used, prev, cur, worst):
        if depth == n:
            if order[1] > cur:
                return
            w = max(worst, rank[prev][cur][0], rank[cur][0][order[1]])
            if w < best[0]:
                best[0] = w
                best[1] = tuple(order)
            return
        row = rank[prev][cur]
        for nxt in range(1, n):
            if used >> nxt & 1:
                continue
            w = row[nxt]
            if w < worst:
                w = worst
            if w >= best[0]:
                continue
            order[depth] = nxt
            extend(depth + 1, used | 1 << nxt, cur, nxt, w)

    for second in range(1, n):
        order[1] = second
        extend(2, 1 | 1 << second, 0, second, -1)

    best_order = best[1]
    assert best_order is not None
    worst_rank, where = -1, None
    for k in range(n):
        a, b, c = best_order[k - 1], best_order[k], best_order[(k + 1) % n]
        if rank[a][b][c] > worst_rank:
            worst_rank, where = rank[a][b][c], (a, b, c)
    return OracleResult(
        best_order=best_order,
        min_max_angle=table.radians(*where),
        acute_tour_exists=worst_rank <= table.right_rank,
    )


def tour_max_angle(points, order: Sequence[int]) -> float:
    """Largest rotation angle of ``order``, picked by exact rank."""
    pts = as_pointset(points)
    table = _AngleTable(pts)
    n = len(order)
    worst, where = -1, None
    for k in range(n):
        a, b, c = order[k - 1], order[k], order[(k + 1) % n]
        if table.rank[a][b][c] > worst:
            worst, where = table.rank[a][b][c], (a, b, c)
    return table.radians(*where)


def acute_tour_exists_bruteforce(points) -> bool:
    """Second, independent enumeration using only dot-product signs."""
    pts = _validate(points)
    n = len(pts)
    for rest in itertools.permutations(range(1, n)):
        order = (0,) + rest
        if all(
            _dot_at(pts[order[k - 1]], pts[order[k]], pts[order[(k + 1) % n]]) >= 0
            for k in range(n)
        ):
            return True
    return False


def _dot_at(a, b, c) -> int:
    return (a[0] - b[0]) * (c[0] - b[0]) + (a[1] - b[1]) * (c[1] - b[1])
