import io
import json
import math
import sys

import numpy as np
import pytest

from spherecircle.cli import main
from spherecircle.geometry import lonlat_to_unit
from support import TETRAHEDRON


@pytest.fixture
def axis_csv(tmp_path):
    path = tmp_path / "axes.csv"
    path.write_text("0,0\n90,0\n0,90\n", encoding="utf-8")
    return str(path)


@pytest.fixture
def tetra_csv(tmp_path):
    rows = []
    for x, y, z in TETRAHEDRON:
        lon = math.degrees(math.atan2(y, x))
        lat = math.degrees(math.asin(z))
        rows.append(f"{lon!r},{lat!r}")
    path = tmp_path / "tetra.csv"
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")
    return str(path)


def test_solve_axis_triple(axis_csv, capsys):
    code = main(["solve", axis_csv, "--seed", "5"])
    captured = capsys.readouterr()
    assert code == 0
    record = json.loads(captured.out)
    assert record["status"] == "hemisphere"
    assert record["center_lon"] == pytest.approx(45.0, abs=1e-9)
    assert record["center_lat"] == pytest.approx(math.degrees(math.atan(1 / math.sqrt(2))), abs=1e-9)
    assert record["radius_rad"] == pytest.approx(math.acos(1 / math.sqrt(3)), abs=1e-12)
    assert "seed: 5" in captured.err


def test_solve_full_sphere_exit_code(tetra_csv, capsys):
    code = main(["solve", tetra_csv, "--seed", "5"])
    captured = capsys.readouterr()
    assert code == 2
    record = json.loads(captured.out)
    assert record["status"].startswith("full_sphere_state_")
    assert record["status"].rsplit("_", 1)[1] in ("a", "b", "c")
    assert "witness" in captured.err


def test_solve_empty_file(tmp_path, capsys):
    path = tmp_path / "empty.csv"
    path.write_text("", encoding="utf-8")
    code = main(["solve", str(path)])
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_solve_missing_file(capsys):
    assert main(["solve", "/nonexistent/nowhere.csv"]) == 1


def test_solve_reads_stdin(axis_csv, capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("0,0\n10,10\n"))
    code = main(["solve", "-", "--seed", "1"])
    captured = capsys.readouterr()
    assert code == 0
    assert json.loads(captured.out)["n_points"] == 2


def test_solve_sphere_radius_km(axis_csv, capsys):
    code = main(["solve", axis_csv, "--seed", "5", "--sphere-radius-km", "6371"])
    record = json.loads(capsys.readouterr().out)
    assert code == 0
    assert record["radius_km"] == pytest.approx(6371 * math.acos(1 / math.sqrt(3)), rel=1e-12)


def test_solve_assume_hemisphere_matches(axis_csv, capsys):
    main(["solve", axis_csv, "--seed", "5"])
    plain = json.loads(capsys.readouterr().out)
    code = main(["solve", axis_csv, "--seed", "5", "--assume-hemisphere"])
    fast = json.loads(capsys.readouterr().out)
    assert code == 0
    assert fast == plain


def test_solve_csv_output(axis_csv, capsys):
    code = main(["solve", axis_csv, "--seed", "5", "--format", "csv"])
    out = capsys.readouterr().out
    assert code == 0
    header, row = out.strip().splitlines()
    assert header.startswith("center_lon,center_lat,radius_rad")
    assert ",hemisphere," in row


def test_gen_deterministic_and_seed_echoed(capsys):
    code = main(["gen", "--n", "5", "--seed", "9"])
    first = capsys.readouterr()
    assert code == 0
    assert "seed: 9" in first.err
    main(["gen", "--n", "5", "--seed", "9"])
    second = capsys.readouterr()
    assert first.out == second.out
    assert len(first.out.splitlines()) == 5


def test_gen_single_point_inside_rectangle(capsys):
    main(["gen", "--n", "1", "--seed", "4", "--lon-span", "90", "--lat-span", "60"])
    out = capsys.readouterr().out.strip()
    lon, lat = map(float, out.split(","))
    assert -45.0 <= lon <= 45.0
    assert -30.0 <= lat <= 30.0


def test_gen_rejects_bad_spans(capsys):
    assert main(["gen", "--n", "5", "--lat-span", "-10"]) == 1
    assert main(["gen", "--n", "5", "--lat-span", "100", "--center", "0,80"]) == 1
    capsys.readouterr()


def test_gen_longitudes_are_uniform(capsys):
    n = 100_000
    main(["gen", "--n", str(n), "--seed", "12"])
    out = capsys.readouterr().out
    lons = np.array([float(line.split(",")[0]) for line in out.splitlines()])
    counts, _ = np.histogram(lons, bins=20, range=(-45.0, 45.0))
    expected = n / 20
    sigma = math.sqrt(n * (1 / 20) * (19 / 20))
    assert counts.sum() == n
    assert np.all(np.abs(counts - expected) <= 3 * sigma)


def test_gen_output_parses_as_cloud(capsys, tmp_path):
    main(["gen", "--n", "50", "--seed", "2"])
    out = capsys.readouterr().out
    for line in out.splitlines():
        lon, lat = map(float, line.split(","))
        lonlat_to_unit(lon, lat)


def test_bench_row_count_and_timing_columns(capsys):
    code = main(["bench", "--sizes", "500,1000", "--repeats", "2", "--seed", "3"])
    captured = capsys.readouterr()
    assert code == 0
    lines = captured.out.strip().splitlines()
    assert lines[0] == "n,run_index,seconds"
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) == 4
    assert [r[0] for r in rows] == ["500", "500", "1000", "1000"]
    assert [r[1] for r in rows] == ["0", "1", "0", "1"]
    assert all(float(r[2]) > 0.0 for r in rows)
    assert "seed: 3" in captured.err


def test_bench_rejects_bad_sizes(capsys):
    assert main(["bench", "--sizes", "0", "--repeats", "1"]) == 1
    assert main(["bench", "--sizes", "10", "--repeats", "0"]) == 1
    capsys.readouterr()


def test_usage_errors_exit_one(capsys):
    assert main(["solve"]) == 1  # missing input path
    assert main(["frobnicate"]) == 1
    assert main(["gen", "--n", "not-a-number"]) == 1
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()
