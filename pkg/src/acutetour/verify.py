"""Independent checker for tours and paths.

Deliberately self-contained: it recomputes every dot product itself rather
than calling into the construction code it is meant to audit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DegenerateInputError, InvalidInputError
from .geometry import as_pointset


@dataclass
class VerificationReport:
    is_permutation: bool
    acute: bool
    violations: list[tuple[int, float]] = field(default_factory=list)
    max_angle: float = 0.0
    max_angle_vertex: int = -1

    @property
    def ok(self) -> bool:
        return self.is_permutation and self.acute

    def as_dict(self) -> dict:
        return {
            "is_permutation": self.is_permutation,
            "acute": self.acute,
            "violations": [[v, a] for v, a in self.violations],
            "max_angle_rad": self.max_angle,
            "max_angle_vertex": self.max_angle_vertex,
        }


def _check(coords, triples) -> VerificationReport:
    report = VerificationReport(is_permutation=True, acute=True)
    for vertex, a, b, c in triples:
        ax, ay = coords[a][0] - coords[b][0], coords[a][1] - coords[b][1]
        cx, cy = coords[c][0] - coords[b][0], coords[c][1] - coords[b][1]
        if (ax == 0 and ay == 0) or (cx == 0 and cy == 0):
            report.violations.append((vertex, math.nan))
            continue
        dot = ax * cx + ay * cy
        angle = math.atan2(abs(ax * cy - ay * cx), dot)
        if dot < 0:
            report.violations.append((vertex, angle))
        if angle > report.max_angle or report.max_angle_vertex < 0:
            report.max_angle = angle
            report.max_angle_vertex = vertex
    report.acute = not report.violations
    return report


def verify_tour(points, order: Sequence[int]) -> VerificationReport:
    """Check that ``order`` is a Hamiltonian cycle with no obtuse rotation angle.

    Vertices in ``violations`` and ``max_angle_vertex`` are input indices.
    """
    pts = as_pointset(points)
    n = len(pts)
    order = [int(i) for i in order]
    if len(order) != n:
        raise InvalidInputError(f"tour has {len(order)} entries for {n} points")
    bad = [i for i in order if not 0 <= i < n]
    if bad:
        raise InvalidInputError(f"tour indices out of range: {bad[:5]}")
    is_perm = len(set(order)) == n
    if n < 3:
        return VerificationReport(is_permutation=is_perm, acute=False)
    triples = (
        (order[k], order[k - 1], order[k], order[(k + 1) % n]) for k in range(n)
    )
    report = _check(pts, triples)
    report.is_permutation = is_perm
    return report


def verify_path(points: Sequence) -> VerificationReport:
    """Check the interior angles of a path given as a list of points.

    A path may not visit a point twice.  Vertices in the report are positions along the path.
    """
    pts = [tuple(p) for p in points]
    if len(pts) < 2:
        raise InvalidInputError("a path needs at least two points")
    seen: dict = {}
    for k, p in enumerate(pts):
        if p in seen:
            raise DegenerateInputError(f"path visits {p} twice (positions {seen[p]} and {k})")
        seen[p] = k
    triples = ((k, k - 1, k, k + 1) for k in range(1, len(pts) - 1))
    return _check(pts, triples)
