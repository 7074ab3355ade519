"""Smallest enclosing circles in the plane, in 3-space, and on the unit sphere.

The spherical solver runs in expected linear time on shuffled input and
detects on the fly whether the cloud is contained in a hemisphere; see
:func:`smallest_enclosing_circle` for the convenience entry point and
:mod:`spherecircle.oracle` for brute-force reference implementations.
"""

from .cloud import PointCloud, resolve_seed, shuffle
from .geodata import (
    EARTH_RADIUS_KM,
    ParseError,
    ResultRecord,
    read_cloud,
    record_from_outcome,
    write_result,
)
from .geometry import (
    ANTIPODAL_EPS,
    CONTAIN_EPS,
    SINGULAR_EPS,
    UNIT_EPS,
    AntipodalPointsError,
    EuclideanBall,
    FullSphereBallError,
    GeoCoordinate,
    PlaneCircle,
    as_unit_vector,
    ball_to_cap,
    cap_to_ball,
    circle_from_three,
    circle_from_two,
    contains,
    geodesic_distance,
    is_antipodal,
    lonlat_to_unit,
    unit_to_lonlat,
)
from .oracle import (
    OracleSelfCheckError,
    oracle_ball3d,
    oracle_hemisphere_feasible,
    oracle_planar_sec,
    oracle_spherical_sec,
)
from .spherical import (
    Enclosed,
    FullSphereState,
    NotInHemisphere,
    SolveOutcome,
    SolveStats,
    secots,
    smallest_enclosing_circle,
)
from .welzl import PlanarCircle, welzl_planar, welzl_sphere3d

__version__ = "0.1.0"

__all__ = [
    "ANTIPODAL_EPS",
    "CONTAIN_EPS",
    "EARTH_RADIUS_KM",
    "SINGULAR_EPS",
    "UNIT_EPS",
    "AntipodalPointsError",
    "Enclosed",
    "EuclideanBall",
    "FullSphereBallError",
    "FullSphereState",
    "GeoCoordinate",
    "NotInHemisphere",
    "OracleSelfCheckError",
    "ParseError",
    "PlanarCircle",
    "PlaneCircle",
    "PointCloud",
    "ResultRecord",
    "SolveOutcome",
    "SolveStats",
    "as_unit_vector",
    "ball_to_cap",
    "cap_to_ball",
    "circle_from_three",
    "circle_from_two",
    "contains",
    "geodesic_distance",
    "is_antipodal",
    "lonlat_to_unit",
    "oracle_ball3d",
    "oracle_hemisphere_feasible",
    "oracle_planar_sec",
    "oracle_spherical_sec",
    "read_cloud",
    "record_from_outcome",
    "resolve_seed",
    "secots",
    "shuffle",
    "smallest_enclosing_circle",
    "unit_to_lonlat",
    "welzl_planar",
    "welzl_sphere3d",
    "write_result",
]
