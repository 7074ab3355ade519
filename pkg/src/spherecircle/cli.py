"""Command-line frontend: solve geodata instances, generate clouds, benchmark.

Exit codes: 0 for a hemisphere result (or successful gen/bench), 1 for
input or usage errors, 2 when the cloud is not contained in a hemisphere.
Results go to stdout; seeds, witnesses and other diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import math
import random
import sys
import time

from .cloud import PointCloud, resolve_seed, shuffle
from .geodata import read_cloud, record_from_outcome, write_result
from .geometry import lonlat_to_unit, unit_to_lonlat
from .spherical import NotInHemisphere, secots


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spherecircle",
        description="Smallest enclosing circle of a point cloud on the sphere.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="solve one instance from a CSV/GeoJSON file")
    solve.add_argument("input", help="path to a .csv/.json/.geojson file, or - for CSV on stdin")
    solve.add_argument("--seed", type=int, default=None, help="shuffle seed (default: entropy)")
    solve.add_argument(
        "--assume-hemisphere",
        action="store_true",
        help="skip full-cloud enclosure scans; only valid for hemisphere-contained input",
    )
    solve.add_argument("--format", choices=("json", "csv"), default="json")
    solve.add_argument(
        "--sphere-radius-km",
        type=float,
        default=None,
        help="also report the radius scaled to a physical sphere of this radius",
    )

    gen = sub.add_parser("gen", help="generate a synthetic cloud as CSV on stdout")
    gen.add_argument("--n", type=int, required=True, help="number of points")
    gen.add_argument("--lon-span", type=float, default=90.0, help="longitude span in degrees")
    gen.add_argument("--lat-span", type=float, default=60.0, help="latitude span in degrees")
    gen.add_argument("--center", default="0,0", help="rectangle center as lon,lat degrees")
    gen.add_argument("--seed", type=int, default=None)

    bench = sub.add_parser("bench", help="time the solver over a range of cloud sizes")
    bench.add_argument(
        "--sizes",
        default="100000,200000,500000,1000000",
        help="comma-separated cloud sizes",
    )
    bench.add_argument("--repeats", type=int, default=10, help="solver runs per size")
    bench.add_argument("--lon-span", type=float, default=90.0)
    bench.add_argument("--lat-span", type=float, default=60.0)
    bench.add_argument("--center", default="0,0")
    bench.add_argument("--seed", type=int, default=None)

    return parser


def _parse_center(text: str):
    try:
        lon_text, lat_text = text.split(",")
        return float(lon_text), float(lat_text)
    except ValueError:
        raise ValueError(f"--center expects 'lon,lat', got {text!r}") from None


def _sample_rectangle(rng: random.Random, n: int, center, lon_span: float, lat_span: float):
    """n points area-uniform on a lon/lat rectangle: uniform in lon and in sin(lat)."""
    center_lon, center_lat = center
    if n < 1:
        raise ValueError("need at least one point")
    if lon_span <= 0.0 or lat_span <= 0.0:
        raise ValueError("spans must be positive")
    lat_lo = center_lat - 0.5 * lat_span
    lat_hi = center_lat + 0.5 * lat_span
    if lat_lo < -90.0 or lat_hi > 90.0:
        raise ValueError(f"latitude range [{lat_lo}, {lat_hi}] leaves [-90, 90]")
    z_lo = math.sin(math.radians(lat_lo))
    z_hi = math.sin(math.radians(lat_hi))
    lon_lo = center_lon - 0.5 * lon_span
    out = []
    for _ in range(n):
        lon = lon_lo + lon_span * rng.random()
        lon = (lon + 180.0) % 360.0 - 180.0
        lat = math.degrees(math.asin(z_lo + (z_hi - z_lo) * rng.random()))
        out.append((lon, lat))
    return out


def _cmd_solve(args) -> int:
    try:
        if args.input == "-":
            cloud = read_cloud(sys.stdin, format="csv")
        else:
            cloud = read_cloud(args.input)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    seed = resolve_seed(args.seed)
    print(f"seed: {seed}", file=sys.stderr)
    outcome = secots(shuffle(cloud, seed), hemisphere_known=args.assume_hemisphere)
    record = record_from_outcome(outcome, len(cloud), seed, sphere_radius_km=args.sphere_radius_km)
    print(write_result(record, args.format))
    if isinstance(outcome, NotInHemisphere):
        print(f"not contained in a hemisphere (state {outcome.state.value})", file=sys.stderr)
        for witness in outcome.witnesses:
            geo = unit_to_lonlat(witness)
            print(f"witness: lon={geo.lon:.9f} lat={geo.lat:.9f}", file=sys.stderr)
        return 2
    return 0


def _cmd_gen(args) -> int:
    seed = resolve_seed(args.seed)
    try:
        rows = _sample_rectangle(
            random.Random(seed), args.n, _parse_center(args.center), args.lon_span, args.lat_span
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"seed: {seed}", file=sys.stderr)
    write = sys.stdout.write
    for lon, lat in rows:
        write(f"{lon!r},{lat!r}\n")
    return 0


def _cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
        if not sizes or any(n < 1 for n in sizes):
            raise ValueError(f"invalid --sizes {args.sizes!r}")
        center = _parse_center(args.center)
        if args.repeats < 1:
            raise ValueError("--repeats must be at least 1")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    seed = resolve_seed(args.seed)
    print(f"seed: {seed}", file=sys.stderr)
    master = random.Random(seed)
    print("n,run_index,seconds")
    for n in sizes:
        try:
            rows = _sample_rectangle(master, n, center, args.lon_span, args.lat_span)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        cloud = PointCloud(lonlat_to_unit(lon, lat) for lon, lat in rows)
        for run_index in range(args.repeats):
            run_rng = random.Random(master.getrandbits(64))
            started = time.perf_counter()
            cloud.shuffle_in_place(run_rng)
            outcome = secots(cloud, hemisphere_known=False)
            elapsed = time.perf_counter() - started
            if isinstance(outcome, NotInHemisphere):
                print(f"warning: size {n} cloud not in a hemisphere", file=sys.stderr)
            print(f"{n},{run_index},{elapsed:.6f}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; 2 is reserved for the
        # not-in-a-hemisphere verdict, so remap to the input-error code.
        return 0 if exc.code in (0, None) else 1
    if args.command == "solve":
        return _cmd_solve(args)
    if args.command == "gen":
        return _cmd_gen(args)
    return _cmd_bench(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
