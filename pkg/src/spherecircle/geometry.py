"""Geometric primitives for circles on the unit sphere.

All points live on the sphere of radius 1 centered at the origin. A
spherical circle of center ``u`` and geodesic radius ``r`` is stored as the
plane ``{x : u.x = cos r}``, i.e. as the pair ``(center, cos_radius)``.
Containment then reduces to a dot product against the plane offset, which
is cheaper than a distance computation. Caps smaller than a hemisphere
(``cos_radius > 0``) correspond one-to-one to Euclidean balls whose
intersection with the sphere is the cap; :func:`cap_to_ball` and
:func:`ball_to_cap` convert between the two views.
"""

from __future__ import annotations

import math
from typing import NamedTuple

Vec3 = tuple[float, float, float]
Vec2 = tuple[float, float]

# Tolerances, chosen for double precision on unit-magnitude data.
UNIT_EPS = 1e-9        # accepted deviation of an input vector from unit length
CONTAIN_EPS = 1e-12    # slack of the plane-side containment test
ANTIPODAL_EPS = 1e-12  # slack on 1 + a.b for the antipodal test
SINGULAR_EPS = 1e-12   # relative pivot threshold of the 3x3 solver


class AntipodalPointsError(ValueError):
    """Two points are (numerically) antipodal, so their midpoint circle is undefined."""


class FullSphereBallError(ValueError):
    """The ball is the unit ball at the origin: its boundary cuts no proper cap."""


class GeoCoordinate(NamedTuple):
    lon: float  # degrees in [-180, 180]
    lat: float  # degrees in [-90, 90]


class PlaneCircle(NamedTuple):
    """A spherical circle as the plane {x : center.x = cos_radius}."""

    center: Vec3       # unit vector to the circle's center on the sphere
    cos_radius: float  # plane offset in (-1, 1]; 1 means a single point

    @property
    def radius(self) -> float:
        """Geodesic radius in radians."""
        return math.acos(max(-1.0, min(1.0, self.cos_radius)))


class EuclideanBall(NamedTuple):
    center: Vec3
    radius: float


def dot(a: Vec3, b: Vec3) -> float:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross(a: Vec3, b: Vec3) -> Vec3:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def norm(v: Vec3) -> float:
    return math.sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2])


def normalize(v) -> Vec3:
    n = math.sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2])
    if n == 0.0:
        raise ValueError("cannot normalize the zero vector")
    return (v[0] / n, v[1] / n, v[2] / n)


def as_unit_vector(v) -> Vec3:
    """Project ``v`` onto the unit sphere; reject vectors off by more than UNIT_EPS."""
    n = math.sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2])
    if abs(n - 1.0) > UNIT_EPS:
        raise ValueError(f"vector has length {n!r}, not unit within {UNIT_EPS}")
    return (v[0] / n, v[1] / n, v[2] / n)


def lonlat_to_unit(lon: float, lat: float) -> Vec3:
    """Unit vector for a longitude/latitude pair in degrees."""
    if not -180.0 <= lon <= 180.0:
        raise ValueError(f"longitude {lon!r} outside [-180, 180]")
    if not -90.0 <= lat <= 90.0:
        raise ValueError(f"latitude {lat!r} outside [-90, 90]")
    lam = math.radians(lon)
    phi = math.radians(lat)
    cos_phi = math.cos(phi)
    return (cos_phi * math.cos(lam), cos_phi * math.sin(lam), math.sin(phi))


def unit_to_lonlat(p) -> GeoCoordinate:
    """Longitude/latitude in degrees of a unit vector; longitude 0 at the poles."""
    x, y, z = p
    n = math.sqrt(x * x + y * y + z * z)
    if abs(n - 1.0) > UNIT_EPS:
        raise ValueError(f"vector has length {n!r}, not unit within {UNIT_EPS}")
    h = math.hypot(x, y)
    lon = math.degrees(math.atan2(y, x)) if h > 0.0 else 0.0
    lat = math.degrees(math.atan2(z, h))
    return GeoCoordinate(lon, lat)


def geodesic_distance(a: Vec3, b: Vec3) -> float:
    """Arc length between two unit vectors, in [0, pi].

    Uses atan2 of the cross/dot pair; plain acos of the dot product loses
    precision near 0 and pi.
    """
    cx = a[1] * b[2] - a[2] * b[1]
    cy = a[2] * b[0] - a[0] * b[2]
    cz = a[0] * b[1] - a[1] * b[0]
    s = math.sqrt(cx * cx + cy * cy + cz * cz)
    c = a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
    return math.atan2(s, c)


def contains(circle: PlaneCircle, p: Vec3) -> bool:
    """Whether ``p`` lies in the closed cap of ``circle`` (boundary inclusive)."""
    u = circle.center
    return u[0] * p[0] + u[1] * p[1] + u[2] * p[2] >= circle.cos_radius - CONTAIN_EPS


def is_antipodal(a: Vec3, b: Vec3) -> bool:
    """Whether two unit vectors are opposite within ANTIPODAL_EPS."""
    return dot(a, b) <= -1.0 + ANTIPODAL_EPS


def circle_from_two(a: Vec3, b: Vec3) -> PlaneCircle:
    """Smallest circle through two non-antipodal points: centered at their midpoint.

    The plane offset equals half the chord midpoint's length, which puts both
    points exactly on the boundary. Coincident points yield a radius-0 circle.
    """
    if is_antipodal(a, b):
        raise AntipodalPointsError(f"points {a} and {b} are antipodal")
    sx = a[0] + b[0]
    sy = a[1] + b[1]
    sz = a[2] + b[2]
    n = math.sqrt(sx * sx + sy * sy + sz * sz)
    # |a+b| = 2 cos(d/2), so the offset cos(d/2) is n/2 (clamped against rounding).
    return PlaneCircle((sx / n, sy / n, sz / n), min(1.0, 0.5 * n))


def _solve3(rows, rhs):
    """Solve a 3x3 system by Gaussian elimination with partial pivoting.

    Returns None when a pivot falls below SINGULAR_EPS relative to the
    largest matrix entry (rank-deficient system).
    """
    m = [
        [rows[0][0], rows[0][1], rows[0][2], rhs[0]],
        [rows[1][0], rows[1][1], rows[1][2], rhs[1]],
        [rows[2][0], rows[2][1], rows[2][2], rhs[2]],
    ]
    scale = max(abs(m[i][j]) for i in range(3) for j in range(3))
    if scale == 0.0:
        return None
    threshold = SINGULAR_EPS * scale
    for k in range(3):
        pivot_row = max(range(k, 3), key=lambda i: abs(m[i][k]))
        if abs(m[pivot_row][k]) <= threshold:
            return None
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
        pk = m[k][k]
        for i in range(k + 1, 3):
            f = m[i][k] / pk
            if f != 0.0:
                for j in range(k, 4):
                    m[i][j] -= f * m[k][j]
    x2 = m[2][3] / m[2][2]
    x1 = (m[1][3] - m[1][2] * x2) / m[1][1]
    x0 = (m[0][3] - m[0][1] * x1 - m[0][2] * x2) / m[0][0]
    return (x0, x1, x2)


def circle_from_three(a: Vec3, b: Vec3, c: Vec3) -> PlaneCircle | None:
    """Circle with three pairwise distinct points on its boundary.

    Solves the linear system placing all three points on one plane at unit
    scale; the normalized solution is the circle's center and its reciprocal
    length the plane offset. Returns None when the system has no solution,
    which happens exactly when the points are coplanar with the origin, i.e.
    they only fit on a great circle.
    """
    if a == b or a == c or b == c:
        raise ValueError("boundary points must be pairwise distinct")
    v = _solve3((a, b, c), (1.0, 1.0, 1.0))
    if v is None:
        return None
    n = norm(v)
    # |v| >= 1 by Cauchy-Schwarz against any unit row; clamp rounding excess.
    return PlaneCircle((v[0] / n, v[1] / n, v[2] / n), min(1.0, 1.0 / n))


def cap_to_ball(circle: PlaneCircle) -> EuclideanBall:
    """Ball whose intersection with the unit sphere is the cap of ``circle``.

    Only defined for caps smaller than a hemisphere (positive plane offset):
    the ball is centered at the plane's foot point and its surface meets the
    sphere in the circle.
    """
    t = circle.cos_radius
    if t <= 0.0:
        raise ValueError("cap must be smaller than a hemisphere (cos_radius > 0)")
    u = circle.center
    return EuclideanBall((t * u[0], t * u[1], t * u[2]), math.sqrt(max(0.0, 1.0 - t * t)))


def ball_to_cap(ball: EuclideanBall) -> PlaneCircle:
    """Inverse of :func:`cap_to_ball` for balls inscribed in the unit sphere.

    Raises FullSphereBallError for the unit ball at the origin (radius >= 1 or
    centered at the origin), whose surface does not cut a proper cap.
    """
    c = ball.center
    r = ball.radius
    n = norm(c)
    if r >= 1.0 or n == 0.0:
        raise FullSphereBallError("ball is not strictly inside the unit sphere")
    if abs(n * n + r * r - 1.0) > UNIT_EPS:
        raise ValueError("ball surface does not lie on the unit sphere")
    return PlaneCircle((c[0] / n, c[1] / n, c[2] / n), min(1.0, n))
