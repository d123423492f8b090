"""Seeded random point sets in integer micro-units.

Every generator returns ``n`` distinct integer points; duplicates produced
by rounding are dropped and replaced by fresh draws.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidInputError

SPAN = 10**6

DISTRIBUTIONS = ("uniform", "gaussian", "clustered", "collinear", "grid", "circle")


def _uniform(rng, m):
    return rng.integers(-SPAN, SPAN + 1, size=(m, 2))


def _gaussian(rng, m):
    return np.rint(rng.normal(0.0, SPAN / 4, size=(m, 2))).astype(np.int64)


def _clustered(rng, m, n_clusters=5):
    centers = rng.integers(-SPAN, SPAN + 1, size=(n_clusters, 2))
    which = rng.integers(0, n_clusters, size=m)
    spread = np.rint(rng.normal(0.0, SPAN / 50, size=(m, 2))).astype(np.int64)
    return centers[which] + spread


class _Collinear:
    """All draws of one instance share a line; ``t`` values are fresh each call."""

    def __init__(self, rng):
        while True:
            d = rng.integers(-20, 21, size=2)
            if d.any() and np.gcd(d[0], d[1]) == 1:
                break
        self.d = d
        self.origin = rng.integers(-SPAN // 10, SPAN // 10 + 1, size=2)
        self.limit = SPAN // max(1, int(np.abs(d).max()))

    def __call__(self, rng, m):
        t = rng.integers(-self.limit, self.limit + 1, size=m)
        return self.origin + t[:, None] * self.d


class _Grid:
    """Random cells of a square lattice with at least twice as many cells as points."""

    def __init__(self, rng, n):
        self.side = int(np.ceil(np.sqrt(2 * n)))
        self.step = max(1, (2 * SPAN) // self.side)

    def __call__(self, rng, m):
        cells = rng.integers(0, self.side, size=(m, 2))
        return cells * self.step - SPAN


def _circle(rng, m):
    theta = rng.uniform(0.0, 2 * np.pi, size=m)
    xy = np.stack([np.cos(theta), np.sin(theta)], axis=1) * SPAN
    return np.rint(xy).astype(np.int64)


def generate_array(n: int, distribution: str = "uniform", seed: int = 0) -> np.ndarray:
    """``(n, 2)`` int64 array of distinct points, deterministic in ``seed``."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise InvalidInputError(f"n must be a positive integer, got {n!r}")
    if distribution not in DISTRIBUTIONS:
        raise InvalidInputError(
            f"unknown distribution {distribution!r}; choose from {', '.join(DISTRIBUTIONS)}"
        )
    rng = np.random.default_rng(seed)
    if distribution == "collinear":
        draw = _Collinear(rng)
        if 2 * draw.limit + 1 < n:
            raise InvalidInputError(f"cannot place {n} distinct collinear points")
    elif distribution == "grid":
        draw = _Grid(rng, n)
    else:
        draw = {"uniform": _uniform, "gaussian": _gaussian, "clustered": _clustered,
                "circle": _circle}[distribution]

    have = np.empty((0, 2), dtype=np.int64)
    for _ in range(100):
        need = n - len(have)
        if need <= 0:
            break
        batch = np.asarray(draw(rng, need + need // 8 + 8), dtype=np.int64)
        both = np.concatenate([have, batch])
        _, first = np.unique(both, axis=0, return_index=True)
        have = both[np.sort(first)]
    if len(have) < n:
        raise InvalidInputError(f"could not draw {n} distinct {distribution} points")
    return have[:n]


def generate_points(n: int, distribution: str = "uniform", seed: int = 0) -> list[tuple[int, int]]:
    return [(int(x), int(y)) for x, y in generate_array(n, distribution, seed)]
