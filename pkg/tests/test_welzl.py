import math

import numpy as np
import pytest

from spherecircle.cloud import shuffle
from spherecircle.oracle import oracle_ball3d, oracle_planar_sec
from spherecircle.welzl import welzl_planar, welzl_sphere3d
from support import GLOBAL_SEEDS, TETRAHEDRON


def test_planar_empty_rejected():
    with pytest.raises(ValueError):
        welzl_planar([])


def test_planar_single_point():
    circle = welzl_planar([(0.0, 0.0)])
    assert circle.center == (0.0, 0.0)
    assert circle.radius == 0.0


def test_planar_unit_circle_triple():
    circle = welzl_planar([(-1.0, 0.0), (1.0, 0.0), (0.0, 1.0)])
    assert circle.center == pytest.approx((0.0, 0.0), abs=1e-12)
    assert circle.radius == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("seed", GLOBAL_SEEDS)
def test_planar_matches_oracle(seed):
    rng = np.random.default_rng(seed)
    for trial in range(500):
        n = int(rng.integers(1, 26))
        pts = [tuple(p) for p in rng.uniform(-1.0, 1.0, size=(n, 2))]
        mine = welzl_planar(shuffle(pts, seed=trial))
        ref = oracle_planar_sec(pts)
        assert abs(mine.radius - ref.radius) <= 1e-10


def test_ball_two_points_diameter():
    a, b = (0.0, 0.0, 0.0), (2.0, 0.0, 0.0)
    ball = welzl_sphere3d([a, b])
    assert ball.center == pytest.approx((1.0, 0.0, 0.0), abs=1e-15)
    assert ball.radius == pytest.approx(1.0, abs=1e-15)


def test_ball_tetrahedron_is_unit_sphere():
    ball = welzl_sphere3d(shuffle(TETRAHEDRON, seed=5))
    assert max(abs(c) for c in ball.center) <= 1e-12
    assert ball.radius == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("seed", GLOBAL_SEEDS)
def test_ball_matches_oracle(seed):
    rng = np.random.default_rng(seed)
    for trial in range(500):
        n = int(rng.integers(1, 21))
        pts = [tuple(p) for p in rng.uniform(-1.0, 1.0, size=(n, 3))]
        mine = welzl_sphere3d(shuffle(pts, seed=trial))
        ref = oracle_ball3d(pts)
        assert abs(mine.radius - ref.radius) <= 1e-10
        assert max(abs(a - b) for a, b in zip(mine.center, ref.center)) <= 1e-9


@pytest.mark.parametrize("seed", GLOBAL_SEEDS)
def test_ball_with_duplicates_matches_oracle(seed):
    rng = np.random.default_rng(seed)
    for trial in range(50):
        n = int(rng.integers(2, 12))
        pts = [tuple(p) for p in rng.uniform(-1.0, 1.0, size=(n, 3))]
        pts += [pts[int(rng.integers(0, n))] for _ in range(3)]
        mine = welzl_sphere3d(shuffle(pts, seed=trial))
        ref = oracle_ball3d(pts)
        assert abs(mine.radius - ref.radius) <= 1e-10


def test_ball_encloses_everything():
    rng = np.random.default_rng(0)
    pts = [tuple(p) for p in rng.normal(size=(400, 3))]
    ball = welzl_sphere3d(shuffle(pts, seed=1))
    worst = max(math.dist(ball.center, p) for p in pts)
    assert worst <= ball.radius + 1e-9
