"""Command-line interface: exit codes, CSV schemas, manifests, reproducibility."""

import math
import os

import pytest

from polaritondecay.cli_io import main, run

FAST = ["--set", "zone_points=64"]


def read_csv(path):
    with open(path, "r", encoding="utf-8") as handle:
        header = handle.readline().strip().split(",")
        rows = [[float(x) for x in line.split(",")] for line in handle if line.strip()]
    return header, rows


def read_manifest(path):
    out = {}
    with open(path, "r", encoding="utf-8") as handle:
        for line in handle:
            key, _, value = line.strip().partition("=")
            out[key] = value
    return out


def test_unknown_command_exits_2(tmp_path):
    assert run("frobnicate", out_dir=str(tmp_path)) == 2


def test_bad_override_exits_2(tmp_path):
    assert run("bands", overrides=["gn=-1"], out_dir=str(tmp_path)) == 2
    assert run("bands", overrides=["nope=1"], out_dir=str(tmp_path)) == 2
    assert run("sweep-eta", overrides=FAST[1:], out_dir=str(tmp_path), grid_eta=1) == 2


def test_bad_config_file_exits_2(tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("mystery=1\n")
    assert run("bands", config_path=str(cfg), out_dir=str(tmp_path)) == 2


def test_point_beyond_threshold_exits_3(tmp_path):
    # eta_c = sqrt(1000) ~ 31.6 at the default detuning
    code = run("point", overrides=["eta=40"] + FAST[1:], out_dir=str(tmp_path))
    assert code == 3


def test_unwritable_output_exits_4(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code = run("bands", overrides=FAST[1:], out_dir=str(blocker / "sub"))
    assert code == 4


def test_bands_schema_and_row_count(tmp_path):
    assert run("bands", overrides=FAST[1:], out_dir=str(tmp_path), grid_q=64) == 0
    header, rows = read_csv(tmp_path / "bands.csv")
    assert header == ["q", "omega1", "omega2", "omega3"]
    assert len(rows) == 64
    assert rows[-1][0] == pytest.approx(0.5)
    for row in rows:
        assert row[1] <= row[2] <= row[3]


def test_pair_density_schema(tmp_path):
    assert run("pair-density", out_dir=str(tmp_path), grid_q=64) == 0
    header, rows = read_csv(tmp_path / "pair_density.csv")
    assert header == ["omega", "d_beliaev", "d_landau"]
    assert len(rows) == 2048
    assert all(r[1] >= 0.0 and r[2] >= 0.0 for r in rows)


def test_point_schema(tmp_path):
    code = run("point", overrides=["eta=15.0"], out_dir=str(tmp_path), grid_q=64)
    assert code == 0
    header, rows = read_csv(tmp_path / "point.csv")
    assert header == [
        "eta_over_etac",
        "omega_soft",
        "gamma_landau",
        "gamma_beliaev",
        "temperature",
        "epsilon",
    ]
    assert len(rows) == 1
    assert rows[0][0] == pytest.approx(15.0 / math.sqrt(1000.0), rel=1e-9)


def test_sweep_csv_and_manifest(tmp_path):
    code = run("sweep-eta", out_dir=str(tmp_path), grid_eta=8, grid_q=64)
    assert code == 0
    header, rows = read_csv(tmp_path / "sweep_eta.csv")
    assert header == ["eta_over_etac", "omega_soft", "gamma_landau", "gamma_beliaev"]
    assert len(rows) == 8
    assert rows[0][0] == 0.0
    assert rows[-1][0] == pytest.approx(0.99, rel=1e-9)

    manifest = read_manifest(tmp_path / "sweep_eta.manifest.txt")
    assert manifest["command"] == "sweep-eta"
    assert manifest["grid_eta"] == "8"
    assert manifest["grid_q"] == "64"
    assert float(manifest["eta_c"]) == pytest.approx(math.sqrt(1000.0), rel=1e-12)
    assert "version" in manifest and "duration_seconds" in manifest
    for field in ("delta_c", "eta", "u0", "gn", "n_c", "temperature", "epsilon"):
        assert field in manifest


def test_manifest_reflects_override_precedence(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("gn=0.2\ntemperature=0.3\n")
    code = run(
        "bands",
        config_path=str(cfg),
        overrides=["gn=0.25"],
        out_dir=str(tmp_path),
        grid_q=64,
    )
    assert code == 0
    manifest = read_manifest(tmp_path / "bands.manifest.txt")
    assert float(manifest["gn"]) == 0.25  # override beats config
    assert float(manifest["temperature"]) == 0.3  # config beats default


def test_reruns_are_byte_identical(tmp_path):
    a = tmp_path / "a"
    b = tmp_path / "b"
    for out in (a, b):
        assert run("sweep-eta", out_dir=str(out), grid_eta=8, grid_q=64) == 0
    assert (a / "sweep_eta.csv").read_bytes() == (b / "sweep_eta.csv").read_bytes()


def test_main_parses_argv(tmp_path):
    assert main(["bands", "--out", str(tmp_path), "--grid-q", "64"]) == 0
    assert os.path.exists(tmp_path / "bands.csv")
    assert os.path.exists(tmp_path / "bands.manifest.txt")
