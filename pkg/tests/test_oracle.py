import math
import time

import pytest
from hypothesis import given, settings, strategies as st

from acutetour.errors import InvalidInputError
from acutetour.oracle import (
    acute_tour_exists_bruteforce,
    angle_key,
    exhaustive_min_max_tour,
    tour_max_angle,
)
from acutetour.verify import verify_tour
from conftest import SQUARE, TRIANGLE_CENTER


def test_triangle_with_center():
    t0 = time.perf_counter()
    res = exhaustive_min_max_tour(TRIANGLE_CENTER)
    assert time.perf_counter() - t0 < 1
    assert res.min_max_angle == pytest.approx(2 * math.pi / 3, abs=1e-4)
    assert not res.acute_tour_exists


def test_five_collinear():
    res = exhaustive_min_max_tour([(i, 0) for i in range(5)])
    assert res.min_max_angle == math.pi
    assert not res.acute_tour_exists
    assert not acute_tour_exists_bruteforce([(i, 0) for i in range(5)])


def test_four_collinear_has_a_zero_tour():
    res = exhaustive_min_max_tour([(i, 0) for i in range(4)])
    assert res.best_order == (0, 2, 1, 3)
    assert res.min_max_angle == 0.0
    assert res.acute_tour_exists


def test_square_crossing_tour_beats_the_boundary():
    # The self-crossing cycle has 45 degree angles where the boundary cycle
    # has right angles.
    res = exhaustive_min_max_tour(SQUARE)
    assert res.best_order == (0, 1, 3, 2)
    assert res.min_max_angle == pytest.approx(math.pi / 4, abs=1e-12)
    assert res.acute_tour_exists
    assert tour_max_angle(SQUARE, [0, 1, 2, 3]) == pytest.approx(math.pi / 2)


def test_size_limits():
    with pytest.raises(InvalidInputError):
        exhaustive_min_max_tour([(0, 0), (1, 0)])
    with pytest.raises(InvalidInputError):
        exhaustive_min_max_tour([(i, i * i) for i in range(13)])


def test_angle_key_orders_angles():
    o = (0, 0)
    keys = [angle_key((1, 0), o, p) for p in [(1, 0), (3, 1), (1, 1), (0, 1), (-1, 1), (-1, 0)]]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    assert angle_key((1, 0), o, (1, 1)) == angle_key((2, 0), o, (5, 5))


def test_twelve_points_in_reasonable_time():
    import random

    rng = random.Random(12)
    pts = set()
    while len(pts) < 12:
        pts.add((rng.randint(-1000, 1000), rng.randint(-1000, 1000)))
    pts = sorted(pts)
    t0 = time.perf_counter()
    res = exhaustive_min_max_tour(pts)
    assert time.perf_counter() - t0 < 30
    assert verify_tour(pts, res.best_order).is_permutation


small_sets = st.lists(
    st.tuples(st.integers(-6, 6), st.integers(-6, 6)), min_size=3, max_size=8, unique=True
)


@settings(max_examples=150, deadline=None)
@given(small_sets)
def test_oracle_agrees_with_bruteforce_and_verifier(pts):
    res = exhaustive_min_max_tour(pts)
    assert res.acute_tour_exists == acute_tour_exists_bruteforce(pts)
    rep = verify_tour(pts, res.best_order)
    assert rep.is_permutation
    assert rep.acute == res.acute_tour_exists
    assert abs(rep.max_angle - res.min_max_angle) <= 1e-12


@settings(max_examples=60, deadline=None)
@given(small_sets, st.randoms(use_true_random=False))
def test_oracle_is_a_lower_bound(pts, rnd):
    res = exhaustive_min_max_tour(pts)
    order = list(range(len(pts)))
    rnd.shuffle(order)
    assert tour_max_angle(pts, order) >= res.min_max_angle - 1e-12
