"""Shared generators for randomized test clouds."""

import math

import numpy as np

# Property suites run once per global seed (three distinct seeds).
GLOBAL_SEEDS = (101, 202, 303)

AXIS_TRIPLE = [(1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0)]

# Regular tetrahedron inscribed in the unit sphere; its hull contains the
# origin, so no hemisphere contains all four vertices.
TETRAHEDRON = [
    tuple(c / math.sqrt(3.0) for c in corner)
    for corner in ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1))
]


def random_rotation(rng: np.random.Generator) -> np.ndarray:
    q, _ = np.linalg.qr(rng.normal(size=(3, 3)))
    if np.linalg.det(q) < 0:
        q[:, 0] *= -1.0
    return q


def sphere_uniform(rng: np.random.Generator, n: int) -> np.ndarray:
    pts = rng.normal(size=(n, 3))
    return pts / np.linalg.norm(pts, axis=1)[:, None]


def cap_cloud(rng: np.random.Generator, n: int, cap_radius: float | None = None) -> list:
    """n points area-uniform inside a random cap of radius below pi/2 - 0.05."""
    if cap_radius is None:
        cap_radius = float(rng.uniform(0.02, math.pi / 2 - 0.0501))
    axis = sphere_uniform(rng, 1)[0]
    height = rng.uniform(math.cos(cap_radius), 1.0, size=n)
    azimuth = rng.uniform(0.0, 2.0 * math.pi, size=n)
    ring = np.sqrt(1.0 - height**2)
    local = np.stack([ring * np.cos(azimuth), ring * np.sin(azimuth), height], axis=1)
    pts = local @ _rotation_to(axis).T
    pts /= np.linalg.norm(pts, axis=1)[:, None]
    return [tuple(p) for p in pts]


def full_sphere_cloud(rng: np.random.Generator, n_extra: int = 0) -> list:
    """A randomly rotated tetrahedral frame plus extra uniform points."""
    rot = random_rotation(rng)
    pts = np.asarray(TETRAHEDRON) @ rot.T
    if n_extra:
        pts = np.vstack([pts, sphere_uniform(rng, n_extra)])
    pts /= np.linalg.norm(pts, axis=1)[:, None]
    return [tuple(p) for p in pts]


def _rotation_to(axis: np.ndarray) -> np.ndarray:
    """Rotation carrying the +z axis onto ``axis``."""
    z = np.array([0.0, 0.0, 1.0])
    v = np.cross(z, axis)
    s = np.linalg.norm(v)
    c = float(z @ axis)
    if s < 1e-12:
        return np.eye(3) if c > 0 else np.diag([1.0, -1.0, -1.0])
    vx = np.array([[0, -v[2], v[1]], [v[2], 0, -v[0]], [-v[1], v[0], 0]])
    return np.eye(3) + vx + vx @ vx * ((1.0 - c) / (s * s))
