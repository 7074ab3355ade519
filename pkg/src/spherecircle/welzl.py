"""Welzl's smallest-circle and smallest-ball solvers in almost iterative form.

The classic recursive formulation recurses once per point, which breaks on
large inputs; here recursion only happens when a point is identified as a
boundary point, so the depth is bounded by the number of points that pin
the result (3 in the plane, 4 in space). Expected linear runtime requires
the input order to be a uniformly random permutation, which is the caller's
responsibility (see :func:`spherecircle.cloud.shuffle`).
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple

from .cloud import PointCloud
from .geometry import EuclideanBall, Vec2, Vec3, _solve3


class PlanarCircle(NamedTuple):
    center: Vec2
    radius: float


def _as_cloud(points) -> PointCloud:
    return points if isinstance(points, PointCloud) else PointCloud(points)


# ---------------------------------------------------------------------------
# d = 2: smallest enclosing circle in the plane


def welzl_planar(points: PointCloud | Iterable[Vec2]) -> PlanarCircle:
    """Smallest circle enclosing planar points, expected O(n) on shuffled input.

    Mutates the processing order of a PointCloud argument (move-to-front).
    """
    cloud = _as_cloud(points)
    if len(cloud) == 0:
        raise ValueError("point cloud is empty")
    if cloud.dim != 2:
        raise ValueError(f"expected planar points, got dimension {cloud.dim}")
    if len(cloud) == 1:
        return PlanarCircle(cloud.point_at(cloud.head), 0.0)
    return _planar(cloud, -1, ())


def _planar(cloud, stop, boundary):
    if len(boundary) == 3:
        return _circumcircle_2d(*boundary)
    coords = cloud.coords
    links = cloud.next_link
    handle = cloud.head
    first = list(boundary)
    while len(first) < 2:
        base = 2 * handle
        first.append((coords[base], coords[base + 1]))
        handle = links[handle]
    circle = _diameter_circle_2d(first[0], first[1])
    (cx, cy), r = circle
    reach = r * (1.0 + 1e-12)
    reach *= reach
    while handle != stop:
        base = 2 * handle
        dx = coords[base] - cx
        dy = coords[base + 1] - cy
        if dx * dx + dy * dy > reach:
            point = (coords[base], coords[base + 1])
            circle = _planar(cloud, handle, boundary + (point,))
            (cx, cy), r = circle
            reach = r * (1.0 + 1e-12)
            reach *= reach
            follow = links[handle]
            cloud.move_to_front(handle)
            handle = follow
        else:
            handle = links[handle]
    return circle


def _diameter_circle_2d(a, b) -> PlanarCircle:
    cx = 0.5 * (a[0] + b[0])
    cy = 0.5 * (a[1] + b[1])
    r = max(math.hypot(cx - a[0], cy - a[1]), math.hypot(cx - b[0], cy - b[1]))
    return PlanarCircle((cx, cy), r)


def _circumcircle_2d(a, b, c) -> PlanarCircle:
    # Recenter on the bounding-box midpoint before solving; improves
    # conditioning for nearly collinear triples.
    ox = 0.5 * (min(a[0], b[0], c[0]) + max(a[0], b[0], c[0]))
    oy = 0.5 * (min(a[1], b[1], c[1]) + max(a[1], b[1], c[1]))
    ax, ay = a[0] - ox, a[1] - oy
    bx, by = b[0] - ox, b[1] - oy
    cx, cy = c[0] - ox, c[1] - oy
    d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    if d == 0.0:
        # Collinear triple: fall back to the widest two-point circle.
        return max(
            (_diameter_circle_2d(a, b), _diameter_circle_2d(a, c), _diameter_circle_2d(b, c)),
            key=lambda circ: circ.radius,
        )
    x = ox + ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) + (cx * cx + cy * cy) * (ay - by)) / d
    y = oy + ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) + (cx * cx + cy * cy) * (bx - ax)) / d
    r = max(
        math.hypot(x - a[0], y - a[1]),
        math.hypot(x - b[0], y - b[1]),
        math.hypot(x - c[0], y - c[1]),
    )
    return PlanarCircle((x, y), r)


# ---------------------------------------------------------------------------
# d = 3: smallest enclosing ball in space


def welzl_sphere3d(points: PointCloud | Iterable[Vec3]) -> EuclideanBall:
    """Smallest ball enclosing 3D points, expected O(n) on shuffled input.

    The input need not lie on the unit sphere. Mutates the processing order
    of a PointCloud argument.
    """
    cloud = _as_cloud(points)
    if len(cloud) == 0:
        raise ValueError("point cloud is empty")
    if cloud.dim != 3:
        raise ValueError(f"expected 3D points, got dimension {cloud.dim}")
    if len(cloud) == 1:
        return EuclideanBall(cloud.point_at(cloud.head), 0.0)
    return _ball(cloud, -1, ())


def _ball(cloud, stop, boundary):
    if len(boundary) == 4:
        return _circumsphere(boundary)
    coords = cloud.coords
    links = cloud.next_link
    handle = cloud.head
    first = list(boundary)
    while len(first) < 2:
        base = 3 * handle
        first.append((coords[base], coords[base + 1], coords[base + 2]))
        handle = links[handle]
    ball = _ball_of_two(*first) if len(first) == 2 else _ball_of_three(*first)
    (cx, cy, cz), r = ball
    reach = r + 1e-12 * (1.0 + r)
    reach *= reach
    while handle != stop:
        base = 3 * handle
        dx = coords[base] - cx
        dy = coords[base + 1] - cy
        dz = coords[base + 2] - cz
        if dx * dx + dy * dy + dz * dz > reach:
            point = (coords[base], coords[base + 1], coords[base + 2])
            ball = _ball(cloud, handle, boundary + (point,))
            (cx, cy, cz), r = ball
            reach = r + 1e-12 * (1.0 + r)
            reach *= reach
            follow = links[handle]
            cloud.move_to_front(handle)
            handle = follow
        else:
            handle = links[handle]
    return ball


def _dist(a, b) -> float:
    return math.sqrt((a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2 + (a[2] - b[2]) ** 2)


def _ball_of_two(a, b) -> EuclideanBall:
    c = (0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1]), 0.5 * (a[2] + b[2]))
    return EuclideanBall(c, max(_dist(c, a), _dist(c, b)))


def _encloses(ball, p) -> bool:
    return _dist(ball.center, p) <= ball.radius + 1e-12 * (1.0 + ball.radius)


def _ball_of_three(a, b, c) -> EuclideanBall:
    """Smallest ball enclosing three points.

    Either the diameter ball of the farthest pair (obtuse triangle) or the
    ball centered at the circumcenter within the triangle's plane.
    """
    best = None
    for p, q, other in ((a, b, c), (a, c, b), (b, c, a)):
        ball = _ball_of_two(p, q)
        if _encloses(ball, other) and (best is None or ball.radius < best.radius):
            best = ball
    if best is not None:
        return best
    ux, uy, uz = b[0] - a[0], b[1] - a[1], b[2] - a[2]
    vx, vy, vz = c[0] - a[0], c[1] - a[1], c[2] - a[2]
    nx = uy * vz - uz * vy
    ny = uz * vx - ux * vz
    nz = ux * vy - uy * vx
    nn = nx * nx + ny * ny + nz * nz
    if nn == 0.0:
        # Collinear triple: widest pair wins.
        return max(
            (_ball_of_two(a, b), _ball_of_two(a, c), _ball_of_two(b, c)),
            key=lambda item: item.radius,
        )
    uu = ux * ux + uy * uy + uz * uz
    vv = vx * vx + vy * vy + vz * vz
    # circumcenter = a + (|u|^2 (v x n) + |v|^2 (n x u)) / (2 |n|^2)
    wx = uu * (vy * nz - vz * ny) + vv * (ny * uz - nz * uy)
    wy = uu * (vz * nx - vx * nz) + vv * (nz * ux - nx * uz)
    wz = uu * (vx * ny - vy * nx) + vv * (nx * uy - ny * ux)
    center = (a[0] + wx / (2.0 * nn), a[1] + wy / (2.0 * nn), a[2] + wz / (2.0 * nn))
    return EuclideanBall(center, max(_dist(center, a), _dist(center, b), _dist(center, c)))


def _circumsphere(points) -> EuclideanBall:
    """Sphere through four points; degenerate quadruples fall back to subsets."""
    a = points[0]
    rows = []
    rhs = []
    sa = a[0] * a[0] + a[1] * a[1] + a[2] * a[2]
    for p in points[1:]:
        rows.append((2.0 * (p[0] - a[0]), 2.0 * (p[1] - a[1]), 2.0 * (p[2] - a[2])))
        rhs.append(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] - sa)
    center = _solve3(rows, rhs)
    if center is None:
        return _ball_of_four_degenerate(points)
    return EuclideanBall(center, max(_dist(center, p) for p in points))


def _ball_of_four_degenerate(points) -> EuclideanBall:
    candidates = []
    for i in range(4):
        for j in range(i + 1, 4):
            candidates.append(_ball_of_two(points[i], points[j]))
    for i in range(4):
        triple = [p for k, p in enumerate(points) if k != i]
        candidates.append(_ball_of_three(*triple))
    enclosing = [b for b in candidates if all(_encloses(b, p) for p in points)]
    if not enclosing:
        raise ValueError("degenerate boundary quadruple admits no enclosing ball")
    return min(enclosing, key=lambda item: item.radius)
