import itertools
import random

import pytest

from spherecircle.cloud import PointCloud, resolve_seed, shuffle
from support import GLOBAL_SEEDS


def test_append_iteration_order():
    cloud = PointCloud([(1,), (2,), (3,)])
    assert cloud.to_list() == [(1,), (2,), (3,)]
    assert len(cloud) == 3


def test_append_returns_stable_handles():
    cloud = PointCloud()
    handles = [cloud.append((float(i), 0.0)) for i in range(4)]
    assert handles == [0, 1, 2, 3]
    cloud.move_to_front(handles[2])
    assert cloud.point_at(handles[2]) == (2.0, 0.0)
    assert cloud.to_list() == [(2.0, 0.0), (0.0, 0.0), (1.0, 0.0), (3.0, 0.0)]


def test_mixed_dimensions_rejected():
    with pytest.raises(ValueError):
        PointCloud([(1.0, 2.0), (1.0, 2.0, 3.0)])
    cloud = PointCloud([(1.0, 2.0)])
    with pytest.raises(ValueError):
        cloud.append((1.0, 2.0, 3.0))


def test_move_to_front_relinks():
    cloud = PointCloud([(float(i),) for i in range(5)])
    cloud.move_to_front(3)
    assert cloud.to_list() == [(3.0,), (0.0,), (1.0,), (2.0,), (4.0,)]
    cloud.move_to_front(3)  # head move is a no-op
    assert cloud.to_list() == [(3.0,), (0.0,), (1.0,), (2.0,), (4.0,)]
    cloud.move_to_front(4)  # tail move updates the tail handle
    assert cloud.to_list() == [(4.0,), (3.0,), (0.0,), (1.0,), (2.0,)]
    assert cloud.tail == 2
    assert len(cloud) == 5


@pytest.mark.parametrize("seed", GLOBAL_SEEDS)
def test_move_to_front_matches_list_model(seed):
    rng = random.Random(seed)
    cloud = PointCloud([(float(i),) for i in range(30)])
    model = [(float(i),) for i in range(30)]
    for _ in range(200):
        pick = rng.randrange(30)
        cloud.move_to_front(pick)
        model.remove((float(pick),))
        model.insert(0, (float(pick),))
        assert cloud.to_list() == model


def test_shuffle_singleton_unchanged():
    assert shuffle(PointCloud([(7.0,)]), seed=1).to_list() == [(7.0,)]


def test_shuffle_deterministic_for_seed():
    points = [(float(i),) for i in range(20)]
    first = shuffle(points, seed=99).to_list()
    second = shuffle(points, seed=99).to_list()
    assert first == second
    assert shuffle(points, seed=100).to_list() != first


def test_shuffle_in_place_relinks_all_handles():
    cloud = PointCloud([(float(i),) for i in range(10)])
    cloud.shuffle_in_place(random.Random(3))
    seen = []
    handle = cloud.head
    while handle >= 0:
        seen.append(handle)
        handle = cloud.next_link[handle]
    assert sorted(seen) == list(range(10))
    assert cloud.prev_link[cloud.head] == -1
    assert cloud.next_link[cloud.tail] == -1
    assert sorted(cloud.to_list()) == [(float(i),) for i in range(10)]


def test_shuffle_uniform_over_orders_of_four_points():
    counts = {perm: 0 for perm in itertools.permutations((0.0, 1.0, 2.0, 3.0))}
    points = [(float(i),) for i in range(4)]
    runs = 100_000
    for i in range(runs):
        order = tuple(p[0] for p in shuffle(points, seed=i))
        counts[order] += 1
    for order, count in counts.items():
        assert abs(count / runs - 1 / 24) <= 0.01, (order, count)


def test_resolve_seed():
    assert resolve_seed(42) == 42
    drawn = resolve_seed(None)
    assert 0 <= drawn < 2**64
