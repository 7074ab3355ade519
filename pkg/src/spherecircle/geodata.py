"""Point-cloud ingestion from geodata files and result serialization.

Coordinates are treated as spherical longitude/latitude on a perfect
sphere; no datum transformation is applied. CSV input is lon,lat in
degrees, one point per row, optional header. GeoJSON input accepts the
Point, MultiPoint, LineString, Polygon and MultiPolygon geometry types,
bare or wrapped in Feature / FeatureCollection / GeometryCollection
objects; ring-closing duplicate vertices of polygon rings are dropped.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from pathlib import Path

from .cloud import PointCloud
from .geometry import lonlat_to_unit, unit_to_lonlat
from .spherical import Enclosed, SolveOutcome

EARTH_RADIUS_KM = 6371.0088  # mean Earth radius; applied only when km output is requested

_GEOMETRY_TYPES = ("Point", "MultiPoint", "LineString", "Polygon", "MultiPolygon")

RESULT_FIELDS = (
    "center_lon",
    "center_lat",
    "radius_rad",
    "radius_deg",
    "radius_km",
    "status",
    "n_points",
    "seed",
)


class ParseError(ValueError):
    """Malformed geodata input, with the offending line or feature named."""


@dataclass(frozen=True)
class ResultRecord:
    """Solver result in geographic terms, ready for serialization.

    Geometry fields are None for full-sphere verdicts; ``radius_km`` is None
    unless a physical sphere radius was requested.
    """

    center_lon: float | None
    center_lat: float | None
    radius_rad: float | None
    radius_deg: float | None
    radius_km: float | None
    status: str
    n_points: int
    seed: int


def read_cloud(source, format: str | None = None) -> PointCloud:
    """Read a point cloud from a path or text stream, converting to unit vectors.

    ``format`` is "csv" or "geojson"; when omitted it is inferred from the
    path suffix (.csv / .json / .geojson). Vertex order is preserved.
    """
    if isinstance(source, (str, Path)):
        path = Path(source)
        if format is None:
            suffix = path.suffix.lower()
            if suffix == ".csv":
                format = "csv"
            elif suffix in (".json", ".geojson"):
                format = "geojson"
            else:
                raise ValueError(f"cannot infer format from {path.name!r}; pass format=")
        with open(path, "r", encoding="utf-8", newline="") as stream:
            return read_cloud(stream, format=format)
    if format == "csv":
        points = _read_csv(source)
    elif format == "geojson":
        points = _read_geojson(source)
    else:
        raise ValueError(f"unsupported format {format!r} (expected 'csv' or 'geojson')")
    if not points:
        raise ValueError("input contains no points")
    return PointCloud(points)


def _read_csv(stream) -> list:
    points = []
    first_data_row = True
    for line_no, row in enumerate(csv.reader(stream), start=1):
        if not row or all(not field.strip() for field in row):
            continue
        if len(row) != 2:
            raise ParseError(f"line {line_no}: expected 2 fields (lon,lat), got {len(row)}")
        try:
            lon = float(row[0])
            lat = float(row[1])
        except ValueError:
            if first_data_row:
                first_data_row = False  # header row
                continue
            raise ParseError(f"line {line_no}: non-numeric coordinates {row!r}") from None
        first_data_row = False
        if not (math.isfinite(lon) and math.isfinite(lat)):
            raise ParseError(f"line {line_no}: non-finite coordinates {row!r}")
        try:
            points.append(lonlat_to_unit(lon, lat))
        except ValueError as exc:
            raise ParseError(f"line {line_no}: {exc}") from None
    return points


def _read_geojson(stream) -> list:
    try:
        doc = json.load(stream)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    points = []
    _collect_geojson(doc, "document root", points)
    return points


def _collect_geojson(obj, where: str, points: list) -> None:
    if not isinstance(obj, dict) or "type" not in obj:
        raise ParseError(f"{where}: not a GeoJSON object")
    kind = obj["type"]
    if kind == "FeatureCollection":
        for index, feature in enumerate(obj.get("features", [])):
            _collect_geojson(feature, f"feature {index}", points)
    elif kind == "Feature":
        geometry = obj.get("geometry")
        if geometry is None:
            return
        _collect_geojson(geometry, where, points)
    elif kind == "GeometryCollection":
        for index, geometry in enumerate(obj.get("geometries", [])):
            _collect_geojson(geometry, f"{where}, geometry {index}", points)
    elif kind in _GEOMETRY_TYPES:
        coords = obj.get("coordinates")
        try:
            _collect_coordinates(kind, coords, points)
        except ParseError:
            raise
        except (TypeError, ValueError) as exc:
            raise ParseError(f"{where}: {exc}") from None
    else:
        raise ParseError(f"{where}: unsupported geometry type {kind!r}")


def _collect_coordinates(kind: str, coords, points: list) -> None:
    if kind == "Point":
        points.append(_position(coords))
    elif kind in ("MultiPoint", "LineString"):
        for pos in coords:
            points.append(_position(pos))
    elif kind == "Polygon":
        for ring in coords:
            _collect_ring(ring, points)
    elif kind == "MultiPolygon":
        for polygon in coords:
            for ring in polygon:
                _collect_ring(ring, points)


def _collect_ring(ring, points: list) -> None:
    vertices = list(ring)
    if len(vertices) >= 2 and vertices[0] == vertices[-1]:
        vertices.pop()  # drop the ring-closing duplicate
    for pos in vertices:
        points.append(_position(pos))


def _position(pos):
    if not isinstance(pos, (list, tuple)) or len(pos) < 2:
        raise ValueError(f"position {pos!r} is not a [lon, lat] pair")
    return lonlat_to_unit(float(pos[0]), float(pos[1]))


def record_from_outcome(
    outcome: SolveOutcome,
    n_points: int,
    seed: int,
    sphere_radius_km: float | None = None,
) -> ResultRecord:
    """Build a ResultRecord from a solver outcome."""
    if isinstance(outcome, Enclosed):
        geo = unit_to_lonlat(outcome.circle.center)
        radius = outcome.circle.radius
        return ResultRecord(
            center_lon=geo.lon,
            center_lat=geo.lat,
            radius_rad=radius,
            radius_deg=math.degrees(radius),
            radius_km=radius * sphere_radius_km if sphere_radius_km is not None else None,
            status="hemisphere",
            n_points=n_points,
            seed=seed,
        )
    return ResultRecord(
        center_lon=None,
        center_lat=None,
        radius_rad=None,
        radius_deg=None,
        radius_km=None,
        status=f"full_sphere_state_{outcome.state.value}",
        n_points=n_points,
        seed=seed,
    )


def _sig15(value: float) -> float:
    return float(f"{value:.15g}")


def write_result(record: ResultRecord, format: str = "json") -> str:
    """Serialize a ResultRecord with stable field order and 15 significant digits."""
    values = [getattr(record, name) for name in RESULT_FIELDS]
    if format == "json":
        payload = {
            name: _sig15(v) if isinstance(v, float) else v
            for name, v in zip(RESULT_FIELDS, values)
        }
        return json.dumps(payload)
    if format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow(RESULT_FIELDS)
        writer.writerow(
            [f"{v:.15g}" if isinstance(v, float) else ("" if v is None else v) for v in values]
        )
        return buffer.getvalue().rstrip("\r\n")
    raise ValueError(f"unsupported format {format!r} (expected 'json' or 'csv')")
