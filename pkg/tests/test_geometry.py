import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from acutetour.errors import DegenerateInputError, InvalidInputError
from acutetour.geometry import (
    Orientation,
    PointSet,
    TriangleLocation,
    nonobtuse_at,
    orientation,
    point_in_triangle,
    rotation_angle,
)

coord = st.integers(-10**6, 10**6)
point = st.tuples(coord, coord)


@pytest.mark.parametrize(
    "apex, a, b, expected",
    [
        ((0, 0), (1, 0), (0, 1), True),
        ((0, 0), (1, 0), (-1, 1), False),
        ((0, 0), (2, 1), (1, 2), True),
    ],
)
def test_nonobtuse_examples(apex, a, b, expected):
    assert nonobtuse_at(apex, a, b) is expected


def test_nonobtuse_rejects_coincident_points():
    with pytest.raises(DegenerateInputError):
        nonobtuse_at((0, 0), (0, 0), (1, 1))


def test_orientation_examples():
    assert orientation((0, 0), (1, 0), (0, 1)) is Orientation.COUNTERCLOCKWISE
    assert orientation((0, 0), (1, 1), (2, 2)) is Orientation.COLLINEAR
    assert orientation((0, 0), (0, 1), (1, 0)) is Orientation.CLOCKWISE


def test_point_in_triangle_examples():
    tri = ((0, 0), (4, 0), (0, 4))
    assert point_in_triangle((1, 1), *tri) is TriangleLocation.STRICTLY_INSIDE
    assert point_in_triangle((2, 0), *tri) is TriangleLocation.ON_BOUNDARY
    assert point_in_triangle((5, 5), *tri) is TriangleLocation.OUTSIDE
    assert (
        point_in_triangle((-1, 1), (8, 6), (-10, -2), (3, -8))
        is TriangleLocation.STRICTLY_INSIDE
    )


def test_point_in_degenerate_triangle():
    seg = ((0, 0), (2, 0), (4, 0))
    assert point_in_triangle((3, 0), *seg) is TriangleLocation.ON_BOUNDARY
    assert point_in_triangle((5, 0), *seg) is TriangleLocation.OUTSIDE
    assert point_in_triangle((1, 1), *seg) is TriangleLocation.OUTSIDE


@pytest.mark.parametrize(
    "prev, nxt, expected",
    [((1, 0), (0, 1), math.pi / 2), ((1, 0), (2, 0), 0.0), ((1, 0), (-1, 0), math.pi)],
)
def test_rotation_angle_examples(prev, nxt, expected):
    assert rotation_angle(prev, (0, 0), nxt) == pytest.approx(expected, abs=1e-15)


def test_pointset_validation():
    with pytest.raises(InvalidInputError):
        PointSet([(0, 0), (1, 2), (0, 0)])
    with pytest.raises(InvalidInputError):
        PointSet([(0.5, 1)])
    ps = PointSet([(3, -4), (1, 2)])
    assert ps.n == 2 and ps[0].x == 3 and ps.max_abs_coord() == 4


@given(point, point, point)
def test_orientation_antisymmetric(p, q, r):
    assert orientation(p, q, r) == -orientation(q, p, r)
    assert orientation(p, q, r) == orientation(q, r, p)


@given(point, point, point)
def test_nonobtuse_symmetric_and_matches_angle(apex, a, b):
    if apex in (a, b):
        return
    assert nonobtuse_at(apex, a, b) == nonobtuse_at(apex, b, a)
    ang = rotation_angle(a, apex, b)
    if nonobtuse_at(apex, a, b):
        assert ang <= math.pi / 2 + 1e-12
    else:
        assert ang > math.pi / 2 - 1e-12


@given(point, point, point, point)
def test_triangle_location_invariant_under_vertex_order(s, a, b, c):
    loc = point_in_triangle(s, a, b, c)
    assert point_in_triangle(s, c, a, b) is loc
    assert point_in_triangle(s, b, a, c) is loc


@given(point, point, point)
def test_triangle_vertices_on_boundary(a, b, c):
    assert point_in_triangle(a, a, b, c) is TriangleLocation.ON_BOUNDARY


def test_million_triples_agree_with_float_angle():
    rng = np.random.default_rng(2024)
    pts = rng.integers(-1000, 1001, size=(10**6, 3, 2))
    checked = 0
    for (ax, ay), (bx, by), (cx, cy) in pts.tolist():
        if (bx, by) == (ax, ay) or (cx, cy) == (ax, ay):
            continue
        exact = nonobtuse_at((ax, ay), (bx, by), (cx, cy))
        ux, uy, vx, vy = bx - ax, by - ay, cx - ax, cy - ay
        ang = math.atan2(abs(ux * vy - uy * vx), ux * vx + uy * vy)
        dot = ux * vx + uy * vy
        if dot == 0:
            assert exact
        else:
            assert exact == (ang < math.pi / 2)
        checked += 1
    assert checked > 999_000
