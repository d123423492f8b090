"""Equitable partition of a point set by two orthogonal lines.

Directions are parametrised over a quarter turn,

    u(s) = (1 - s, s),   v(s) = (-s, 1 - s),   0 <= s <= 1,

so every candidate frame has integer basis vectors (for rational ``s``) and
u(1) is u(0) turned by 90 degrees.  For a direction, the two lines are the
halving lines orthogonal to u and v.  In a generic direction each point
lies strictly inside one open quadrant, the four counts are
(k, n/2 - k, k, n/2 - k), and turning the frame by 90 degrees sends k to
n/2 - k.  So the sign of ``k - floor(n/4)`` flips across the quarter turn
and somewhere in between, at a direction where points tie on a line, the
target sizes are reachable by assigning the on-line points to adjacent
closed quadrants.

The search is a bisection.  Floats only steer it; every direction that is
accepted is re-evaluated with exact integer arithmetic, and the returned
labelling is checked against the contract before it leaves this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import InternalInvariantError, InvalidInputError
from .geometry import PointSet, as_pointset

QUADRANTS = (1, 2, 3, 4)

_FLOAT_STEPS = 64


@dataclass(frozen=True)
class OrthoFrame:
    """Two orthogonal lines given by integer directions and doubled offsets.

    ``u`` is the direction of the first line (the frame's x-axis) and ``v``
    the direction of the second.  A point p has frame coordinates
    ``(p.u - cu/2, p.v - cv/2)``; storing the offsets doubled keeps them
    integral because the lines sit midway between two projections.
    """

    u: tuple[int, int]
    v: tuple[int, int]
    cu: int
    cv: int

    def __post_init__(self):
        if self.u == (0, 0) or self.v == (0, 0):
            raise InvalidInputError("frame directions must be nonzero")
        if self.u[0] * self.v[0] + self.u[1] * self.v[1] != 0:
            raise InvalidInputError(f"frame directions {self.u}, {self.v} are not orthogonal")

    def doubled_coords(self, p) -> tuple[int, int]:
        """Frame coordinates times two, as exact integers."""
        u, v = self.u, self.v
        return (
            2 * (p[0] * u[0] + p[1] * u[1]) - self.cu,
            2 * (p[0] * v[0] + p[1] * v[1]) - self.cv,
        )

    def coords(self, p) -> tuple[Fraction, Fraction]:
        fx, fy = self.doubled_coords(p)
        return Fraction(fx, 2), Fraction(fy, 2)

    @property
    def origin(self) -> tuple[Fraction, Fraction]:
        u, v = self.u, self.v
        # o.u = cu/2 and o.v = cv/2; solve the 2x2 system by Cramer's rule.
        det = u[0] * v[1] - u[1] * v[0]
        ox = Fraction(self.cu * v[1] - self.cv * u[1], 2 * det)
        oy = Fraction(u[0] * self.cv - v[0] * self.cu, 2 * det)
        return ox, oy

    def quadrants_of(self, p) -> tuple[int, ...]:
        """All closed quadrants containing ``p`` (1 to 4 of them)."""
        fx, fy = self.doubled_coords(p)
        return tuple(q for q in QUADRANTS if in_closed_quadrant(fx, fy, q))

    def in_quadrant(self, p, q: int) -> bool:
        fx, fy = self.doubled_coords(p)
        return in_closed_quadrant(fx, fy, q)


def in_closed_quadrant(fx, fy, q: int) -> bool:
    if q == 1:
        return fx >= 0 and fy >= 0
    if q == 2:
        return fx <= 0 and fy >= 0
    if q == 3:
        return fx <= 0 and fy <= 0
    if q == 4:
        return fx >= 0 and fy <= 0
    raise ValueError(f"quadrant must be 1..4, got {q}")


def opposite(q: int) -> int:
    return (q + 1) % 4 + 1


@dataclass(frozen=True)
class EquitablePartition:
    points: PointSet
    frame: OrthoFrame
    labels: tuple[int, ...]

    @property
    def sizes(self) -> tuple[int, int, int, int]:
        counts = [0, 0, 0, 0]
        for lab in self.labels:
            counts[lab - 1] += 1
        return tuple(counts)  # type: ignore[return-value]

    @cached_property
    def _by_quadrant(self) -> dict[int, list[int]]:
        labels = np.fromiter(self.labels, dtype=np.int8, count=len(self.labels))
        order = np.argsort(labels, kind="stable")
        bounds = np.searchsorted(labels[order], [1, 2, 3, 4, 5])
        return {
            q: order[bounds[q - 1] : bounds[q]].tolist() for q in QUADRANTS
        }

    def members(self, q: int) -> list[int]:
        """Input indices labelled ``q``, in input order."""
        return list(self._by_quadrant[q])

    def check(self, canonical_sizes: bool = True) -> None:
        """Raise InternalInvariantError unless the partition contract holds.

        With ``canonical_sizes`` the sizes must be exactly
        (floor(n/4), ceil(n/4), floor(n/4), ceil(n/4)); otherwise only
        opposite quadrants must match, which is what survives the frame
        transforms when n is 2 mod 4.
        """
        n = len(self.points)
        if len(self.labels) != n:
            raise InternalInvariantError("label count differs from point count")
        sizes = self.sizes
        if canonical_sizes:
            want = (n // 4, -(-n // 4), n // 4, -(-n // 4))
            if sizes != want:
                raise InternalInvariantError(f"sizes {sizes}, expected {want}")
        elif sizes[0] != sizes[2] or sizes[1] != sizes[3] or sorted(sizes) != sorted(
            (n // 4, -(-n // 4), n // 4, -(-n // 4))
        ):
            raise InternalInvariantError(f"sizes {sizes} are not an equitable pattern")
        for i, (p, lab) in enumerate(zip(self.points, self.labels)):
            if not self.frame.in_quadrant(p, lab):
                raise InternalInvariantError(
                    f"point {i} {tuple(p)} labelled {lab} is outside that closed quadrant"
                )


TRANSFORMS = ("rotate90", "rotate180", "reflect_swap_12_34", "reflect_swap_14_23")

_RELABEL = {
    "rotate90": {1: 4, 2: 1, 3: 2, 4: 3},
    "rotate180": {1: 3, 2: 4, 3: 1, 4: 2},
    "reflect_swap_12_34": {1: 2, 2: 1, 3: 4, 4: 3},
    "reflect_swap_14_23": {1: 4, 4: 1, 2: 3, 3: 2},
}


def frame_transform(partition: EquitablePartition, kind: str) -> EquitablePartition:
    """Change the frame by a quarter-turn symmetry and relabel to match.

    Points never move; only the basis vectors are negated or swapped, so the
    relabelled points stay in their (new) closed quadrants exactly.
    """
    f = partition.frame
    (u, v, cu, cv) = (f.u, f.v, f.cu, f.cv)
    neg = lambda w: (-w[0], -w[1])  # noqa: E731
    if kind == "rotate90":
        frame = OrthoFrame(v, neg(u), cv, -cu)
    elif kind == "rotate180":
        frame = OrthoFrame(neg(u), neg(v), -cu, -cv)
    elif kind == "reflect_swap_12_34":
        frame = OrthoFrame(neg(u), v, -cu, cv)
    elif kind == "reflect_swap_14_23":
        frame = OrthoFrame(u, neg(v), cu, -cv)
    else:
        raise ValueError(f"unknown transform {kind!r}; expected one of {TRANSFORMS}")
    relabel = _RELABEL[kind]
    return EquitablePartition(
        partition.points, frame, tuple(relabel[lab] for lab in partition.labels)
    )


def equitable_partition(points) -> EquitablePartition:
    """Split ``points`` by two orthogonal lines into an equitable partition.

    Deterministic for a fixed input order.  Requires n even, n >= 4 and
    distinct points.
    """
    pts = as_pointset(points)
    n = len(pts)
    if n < 4 or n % 2:
        raise InvalidInputError(f"equitable partition needs an even n >= 4, got n={n}")
    search = _Search(pts)
    result = search.run()
    result.check()
    return result


# --------------------------------------------------------------------------
# search machinery


def _direction(s: Fraction) -> tuple[tuple[int, int], tuple[int, int]]:
    a, b = s.numerator, s.denominator
    return (b - a, a), (-a, b - a)


class _Search:
    def __init__(self, pts: PointSet):
        self.pts = pts
        self.n = len(pts)
        self.half = self.n // 2
        self.target = self.n // 4
        self.xs = [p.x for p in pts]
        self.ys = [p.y for p in pts]
        self._fx = np.array(self.xs, dtype=float)
        self._fy = np.array(self.ys, dtype=float)

    # -- exact evaluations -------------------------------------------------

    def _projections(self, s: Fraction):
        (u0, u1), (v0, v1) = _direction(s)
        xs, ys = self.xs, self.ys
        pu = [x * u0 + y * u1 for x, y in zip(xs, ys)]
        pv = [x * v0 + y * v1 for x, y in zip(xs, ys)]
        return pu, pv

    def _perturbed_orders(self, s: Fraction, pu, pv):
        """Orders along u and v just after ``s`` (direction s + eps).

        u(s+eps) = u(s) + eps*(-1, 1) and v(s+eps) = v(s) + eps*(-1, -1), so
        ties break on those secondary projections.  Distinct points never
        tie on both keys.
        """
        xs, ys = self.xs, self.ys
        order_u = sorted(range(self.n), key=lambda i: (pu[i], ys[i] - xs[i]))
        order_v = sorted(range(self.n), key=lambda i: (pv[i], -xs[i] - ys[i]))
        return order_u, order_v

    def perturbed(self, s: Fraction):
        """Labelling valid at ``s`` that comes from the generic order after it.

        Returns (k, frame, labels, order_u, order_v) where k is the size of
        quadrant 1.
        """
        pu, pv = self._projections(s)
        order_u, order_v = self._perturbed_orders(s, pu, pv)
        h = self.half
        right = bytearray(self.n)
        for i in order_u[h:]:
            right[i] = 1
        up = bytearray(self.n)
        for i in order_v[h:]:
            up[i] = 1
        labels = []
        k = 0
        for i in range(self.n):
            if right[i]:
                lab = 1 if up[i] else 4
            else:
                lab = 2 if up[i] else 3
            k += lab == 1
            labels.append(lab)
        u, v = _direction(s)
        frame = OrthoFrame(
            u,
            v,
            pu[order_u[h - 1]] + pu[order_u[h]],
            pv[order_v[h - 1]] + pv[order_v[h]],
        )
        return k, frame, labels, order_u, order_v

    def sign(self, s: Fraction):
        k, frame, labels, ou, ov = self.perturbed(s)
        d = k - self.target
        sgn = (d > 0) - (d < 0)
        result = EquitablePartition(self.pts, frame, tuple(labels)) if sgn == 0 else None
        return sgn, result, ou, ov

    def exact_at(self, s: Fraction) -> Optional[EquitablePartition]:
        """Tie-aware feasibility at exactly ``s``.

        Points on a line may take either adjacent closed quadrant and a
        point at the origin may take any; the counting problem is solved by
        enumeration over the few free quantities.
        """
        pu, pv = self._projections(s)
        h = self.half
        su = sorted(pu)
        sv = sorted(pv)
        cu = su[h - 1] + su[h]
        cv = sv[h - 1] + sv[h]
        groups: dict[str, list[int]] = {
            k: [] for k in ("1", "2", "3", "4", "A", "B", "C", "D", "O")
        }
        for i in range(self.n):
            fx = 2 * pu[i] - cu
            fy = 2 * pv[i] - cv
            if fx > 0 and fy > 0:
                g = "1"
            elif fx < 0 and fy > 0:
                g = "2"
            elif fx < 0 and fy < 0:
                g = "3"
            elif fx > 0 and fy < 0:
                g = "4"
            elif fy == 0 and fx > 0:
                g = "A"  # quadrant 1 or 4
            elif fy == 0 and fx < 0:
                g = "B"  # quadrant 2 or 3
            elif fx == 0 and fy > 0:
                g = "C"  # quadrant 1 or 2
            elif fx == 0 and fy < 0:
                g = "D"  # quadrant 3 or 4
            else:
                g = "O"
            groups[g].append(i)
        plan = _solve_boundary(
            {k: len(v) for k, v in groups.items()},
            (self.target, h - self.target, self.target, h - self.target),
        )
        if plan is None:
            return None
        labels = [0] * self.n
        for g in "1234":
            for i in groups[g]:
                labels[i] = int(g)
        for g, (first, second) in (("A", (1, 4)), ("B", (2, 3)), ("C", (1, 2)), ("D", (3, 4))):
            m = plan[g]
            for j, i in enumerate(groups[g]):
                labels[i] = first if j < m else second
        for i in groups["O"]:
            labels[i] = plan["O"]
        u, v = _direction(s)
        return EquitablePartition(self.pts, OrthoFrame(u, v, cu, cv), tuple(labels))

    # -- float guidance ------------------------------------------------------

    def float_sign(self, s: float) -> int:
        fx, fy = self._fx, self._fy
        pu = fx * (1.0 - s) + fy * s
        pv = -fx * s + fy * (1.0 - s)
        ou = np.lexsort((fy - fx, pu))
        ov = np.lexsort((-fx - fy, pv))
        h = self.half
        right = np.zeros(self.n, dtype=bool)
        right[ou[h:]] = True
        up = np.zeros(self.n, dtype=bool)
        up[ov[h:]] = True
        d = int(np.count_nonzero(right & up)) - self.target
        return (d > 0) - (d < 0)

    # -- driver ------------------------------------------------------------------

    def run(self) -> EquitablePartition:
        zero, one = Fraction(0), Fraction(1)
        found = self.exact_at(zero)
        if found is not None:
            return found
        s_lo, found, _, _ = self.sign(zero)
        if found is not None:
            return found
        s_hi, found, _, _ = self.sign(one)
        if found is not None:
            return found
        if s_lo != -s_hi:
            raise InternalInvariantError(
                "quarter-turn symmetry violated: signs "
                f"{s_lo} and {s_hi} at the ends of the sweep"
            )

        flo, fhi = 0.0, 1.0
        for _ in range(_FLOAT_STEPS):
            mid = 0.5 * (flo + fhi)
            if mid <= flo or mid >= fhi:
                break
            sg = self.float_sign(mid)
            if sg == 0:
                sg, found, _, _ = self.sign(Fraction(mid))
                if found is not None:
                    return found
            if sg == s_lo:
                flo = mid
            else:
                fhi = mid

        lo, hi = Fraction(flo), Fraction(fhi)
        a, found, _, _ = self.sign(lo)
        if found is not None:
            return found
        b, found, _, _ = self.sign(hi)
        if found is not None:
            return found
        if a != s_lo or b != s_hi:
            # Float rounding misled the bracket; restart from the exact one.
            lo, hi = zero, one

        # Two distinct event directions differ by at least 1/(16 M^2), so a
        # narrower bracket holds exactly one of them.
        m = max(1, self.pts.max_abs_coord())
        width = Fraction(1, 16 * m * m + 1)
        while hi - lo >= width:
            mid = (lo + hi) / 2
            sg, found, _, _ = self.sign(mid)
            if found is not None:
                return found
            if sg == s_lo:
                lo = mid
            else:
                hi = mid
        t = self._next_event(lo, hi)
        if t is not None:
            found = self.exact_at(t)
            if found is not None:
                return found
        # Not expected: step through every event of the quarter turn.
        lo = zero
        while True:
            t = self._next_event(lo, one)
            if t is None:
                break
            found = self.exact_at(t)
            if found is not None:
                return found
            lo = t
        raise InternalInvariantError(
            "no equitable partition found over all candidate directions",
            {"n": self.n},
        )

    def _next_event(self, lo: Fraction, hi: Fraction) -> Optional[Fraction]:
        """First direction in (lo, hi] at which either projection order changes.

        The points that tie at the first event are contiguous in the order
        just after ``lo``, so only neighbouring pairs need checking.
        """
        _, _, ou_lo, ov_lo = self.sign(lo)
        _, _, ou_hi, ov_hi = self.sign(hi)
        xs, ys = self.xs, self.ys
        best = None
        for order_lo, order_hi, axis in ((ou_lo, ou_hi, 0), (ov_lo, ov_hi, 1)):
            pos = [0] * self.n
            for r, i in enumerate(order_hi):
                pos[i] = r
            for a, b in zip(order_lo, order_lo[1:]):
                if pos[a] < pos[b]:
                    continue
                dx, dy = xs[a] - xs[b], ys[a] - ys[b]
                if axis == 0:
                    if dx == dy:
                        continue
                    t = Fraction(dx, dx - dy)
                else:
                    if dx + dy == 0:
                        continue
                    t = Fraction(dy, dx + dy)
                if lo < t <= hi and (best is None or t < best):
                    best = t
        return best


def _solve_boundary(counts: dict[str, int], target: tuple[int, int, int, int]):
    """Distribute on-line points so the quadrant sizes equal ``target``.

    Group A (positive x-axis) splits between quadrants 1 and 4, B (negative
    x-axis) between 2 and 3, C (positive y-axis) between 1 and 2, D
    (negative y-axis) between 3 and 4; O is the origin point, if any.
    Returns how many of each line group go to its first quadrant plus the
    origin's quadrant, or None.
    """
    c1, c2, c3, c4 = (counts[g] for g in "1234")
    nA, nB, nC, nD, nO = (counts[g] for g in "ABCDO")
    t1, t2, t3, t4 = target
    for o in (1, 2, 3, 4) if nO else (0,):
        e = [0, 0, 0, 0]
        if o:
            e[o - 1] = 1
        # Q1 = c1 + a + c, Q2 = c2 + b + (nC - c), Q3 = c3 + (nB - b) + d,
        # Q4 = c4 + (nA - a) + (nD - d); parametrise by c.
        k1 = t1 - c1 - e[0]  # a + c
        k2 = t2 - c2 - e[1] - nC  # b - c
        k3 = t3 - c3 - e[2] - nB  # d - b
        lo = max(0, k1 - nA, -k2, -k2 - k3)
        hi = min(nC, k1, nB - k2, nD - k2 - k3)
        if lo > hi:
            continue
        c = lo
        a, b = k1 - c, k2 + c
        d = k3 + b
        if c4 + (nA - a) + (nD - d) + e[3] != t4:
            continue
        return {"A": a, "B": b, "C": c, "D": d, "O": o}
    return None
