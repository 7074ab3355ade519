"""Smallest enclosing circle of a point cloud on the unit sphere.

The solver runs the 3D ball machinery of :mod:`spherecircle.welzl` directly
on spherical caps in their plane form, in expected linear time on shuffled
input. For clouds contained in an (unknown) open hemisphere it returns the
unique smallest enclosing circle; otherwise it returns a
:class:`NotInHemisphere` verdict carrying one of three witness
configurations that prove no hemisphere contains the cloud:

* state A: two antipodal points were drawn to seed a trial circle;
* state B: a boundary triple only fits on a great circle;
* state C: the circle pinned by a boundary triple fails to enclose some
  already-processed point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .cloud import PointCloud
from .geometry import (
    CONTAIN_EPS,
    PlaneCircle,
    Vec3,
    as_unit_vector,
    circle_from_three,
    circle_from_two,
    is_antipodal,
)

# A point x extends the hemisphere guarantee of the current cap (center u,
# offset t) whenever u.x > -t; require clearance above rounding noise so a
# borderline case runs the full scan instead of skipping it.
_KNOWN_MARGIN = 1e-9


class FullSphereState(Enum):
    """Configurations proving the cloud is not contained in any hemisphere."""

    ANTIPODAL_PAIR = "a"
    GREAT_CIRCLE_BOUNDARY = "b"
    ENCLOSURE_FAILURE = "c"


@dataclass(frozen=True)
class Enclosed:
    """Unique smallest enclosing circle of a hemisphere-contained cloud."""

    circle: PlaneCircle


@dataclass(frozen=True)
class NotInHemisphere:
    """Proof that the cloud spans more than a hemisphere.

    ``witnesses`` holds the points that fired the detection: the antipodal
    pair (state A), the great-circle boundary triple (state B), or the
    non-enclosed point followed by the boundary triple (state C).
    """

    state: FullSphereState
    witnesses: tuple[Vec3, ...]


SolveOutcome = Enclosed | NotInHemisphere


@dataclass
class SolveStats:
    """Counters filled in by an instrumented solver run."""

    containment_tests: int = 0
    hemisphere_scans: int = 0
    max_boundary_size: int = 0
    stop_events: int = 0


class _Stop(Exception):
    def __init__(self, state, witnesses):
        self.state = state
        self.witnesses = witnesses


def secots(
    cloud: PointCloud,
    hemisphere_known: bool = False,
    stats: SolveStats | None = None,
) -> SolveOutcome:
    """Solve the smallest-enclosing-circle problem on the already shuffled cloud.

    Points must be unit vectors; shuffling is the caller's responsibility
    (one uniform permutation up front preserves the expected linear runtime).
    With ``hemisphere_known`` the full-cloud enclosure scans are skipped;
    the result is then only defined for hemisphere-contained input. The
    processing order of ``cloud`` is mutated (move-to-front).
    """
    if len(cloud) == 0:
        raise ValueError("point cloud is empty")
    if cloud.dim != 3:
        raise ValueError(f"expected 3D unit vectors, got dimension {cloud.dim}")
    if len(cloud) == 1:
        return Enclosed(PlaneCircle(cloud.point_at(cloud.head), 1.0))
    try:
        circle = _solve(cloud, -1, (), hemisphere_known, stats)
    except _Stop as stop:
        if stats is not None:
            stats.stop_events += 1
        return NotInHemisphere(stop.state, tuple(stop.witnesses))
    return Enclosed(circle)


def _solve(cloud, stop, boundary, known, stats):
    if stats is not None and len(boundary) > stats.max_boundary_size:
        stats.max_boundary_size = len(boundary)

    if len(boundary) == 3:
        circle = circle_from_three(*boundary)
        if circle is None:
            raise _Stop(FullSphereState.GREAT_CIRCLE_BOUNDARY, boundary)
        if not known:
            _scan_enclosure(cloud, stop, circle, boundary, stats)
        return circle

    coords = cloud.coords
    links = cloud.next_link
    handle = cloud.head
    seed = list(boundary)
    while len(seed) < 2:
        base = 3 * handle
        seed.append((coords[base], coords[base + 1], coords[base + 2]))
        handle = links[handle]
    if is_antipodal(seed[0], seed[1]):
        raise _Stop(FullSphereState.ANTIPODAL_PAIR, tuple(seed))
    circle = circle_from_two(seed[0], seed[1])
    ux, uy, uz = circle.center
    threshold = circle.cos_radius - CONTAIN_EPS
    skip_bound = _KNOWN_MARGIN - circle.cos_radius
    returned = False
    tests = 0
    try:
        while handle != stop:
            base = 3 * handle
            tests += 1
            side = coords[base] * ux + coords[base + 1] * uy + coords[base + 2] * uz
            if side < threshold:
                point = (coords[base], coords[base + 1], coords[base + 2])
                child_known = known or (returned and side > skip_bound)
                circle = _solve(cloud, handle, boundary + (point,), child_known, stats)
                returned = True
                ux, uy, uz = circle.center
                threshold = circle.cos_radius - CONTAIN_EPS
                skip_bound = _KNOWN_MARGIN - circle.cos_radius
                follow = links[handle]
                cloud.move_to_front(handle)
                handle = follow
            else:
                handle = links[handle]
    finally:
        if stats is not None:
            stats.containment_tests += tests
    return circle


def _scan_enclosure(cloud, stop, circle, boundary, stats):
    """Check every point of the current sublist against the cap; stop on failure."""
    ux, uy, uz = circle.center
    threshold = circle.cos_radius - CONTAIN_EPS
    coords = cloud.coords
    links = cloud.next_link
    handle = cloud.head
    tests = 0
    try:
        while handle != stop:
            base = 3 * handle
            tests += 1
            if coords[base] * ux + coords[base + 1] * uy + coords[base + 2] * uz < threshold:
                point = (coords[base], coords[base + 1], coords[base + 2])
                raise _Stop(FullSphereState.ENCLOSURE_FAILURE, (point,) + boundary)
            handle = links[handle]
    finally:
        if stats is not None:
            stats.containment_tests += tests
            stats.hemisphere_scans += 1


def smallest_enclosing_circle(
    points: Iterable[Vec3],
    seed: int | None = None,
    assume_hemisphere: bool = False,
    validate: bool = True,
    stats: SolveStats | None = None,
) -> SolveOutcome:
    """Convenience front end: validate, shuffle, and solve a point sequence.

    ``validate`` renormalizes the inputs onto the unit sphere and rejects
    vectors more than UNIT_EPS off it. Pass a ``seed`` for reproducible
    shuffling.
    """
    pts = [as_unit_vector(p) for p in points] if validate else list(points)
    cloud = PointCloud(pts)
    cloud.shuffle_in_place(random.Random(seed))
    return secots(cloud, hemisphere_known=assume_hemisphere, stats=stats)
