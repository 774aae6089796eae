"""Command-line front end: sweeps, CSV persistence, and run manifests.

Commands (each writes <command>.csv plus <command>.manifest.txt in --out):

  sweep-eta     eta_over_etac, omega_soft, gamma_landau, gamma_beliaev
  bands         q, omega1, omega2, omega3
  pair-density  omega, d_beliaev, d_landau
  point         eta_over_etac, omega_soft, gamma_landau, gamma_beliaev,
                temperature, epsilon   (single row at the configured eta)

Numbers are serialized with 12 significant digits; repeated runs with the
same configuration produce byte-identical CSV files.  Exit status: 0 ok,
2 configuration or parameter error, 3 numerical instability (drive at or
beyond the critical coupling), 4 I/O failure.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from dataclasses import dataclass, fields, replace

from . import __version__
from .bogoliubov_core import DiagonalizationError, SoftModeError
from .damping import DampingWorkspace
from .params import (
    ConfigError,
    ModelParams,
    ParameterError,
    critical_coupling,
    load_config,
    parse_overrides,
    resolve,
)
from .spectrum import band_structure, pair_density

_COMMANDS = ("sweep-eta", "bands", "pair-density", "point")
_DEFAULT_ETA_POINTS = 200


@dataclass(frozen=True)
class RunManifest:
    """Reproducibility record written next to every CSV output."""

    command: str
    version: str
    params: ModelParams
    grid_eta: int | None
    grid_q: int
    eta_c: float
    duration_seconds: float

    def lines(self) -> list[str]:
        out = [f"command={self.command}", f"version={self.version}"]
        for field in fields(ModelParams):
            out.append(f"{field.name}={getattr(self.params, field.name)!r}")
        if self.grid_eta is not None:
            out.append(f"grid_eta={self.grid_eta}")
        out.append(f"grid_q={self.grid_q}")
        out.append(f"eta_c={self.eta_c!r}")
        out.append(f"duration_seconds={self.duration_seconds:.3f}")
        return out


def _fmt(value: float) -> str:
    return f"{value:.11e}"


def _write_csv(path: str, header: list[str], rows: list[list[float]]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(",".join(header) + "\n")
        for row in rows:
            handle.write(",".join(_fmt(x) for x in row) + "\n")


def _sweep_rows(params: ModelParams, grid_eta: int | None):
    workspace = DampingWorkspace(params)
    grid = workspace.default_eta_grid(grid_eta or _DEFAULT_ETA_POINTS)
    rows = [
        [p.eta_over_etac, p.omega_soft, p.gamma_landau, p.gamma_beliaev]
        for p in workspace.sweep(grid)
    ]
    return ["eta_over_etac", "omega_soft", "gamma_landau", "gamma_beliaev"], rows


def _bands_rows(params: ModelParams, grid_eta: int | None):
    bands = band_structure(params)
    rows = [
        [q, f[0], f[1], f[2]] for q, f in zip(bands.qs, bands.frequencies)
    ]
    return ["q", "omega1", "omega2", "omega3"], rows


def _pair_density_rows(params: ModelParams, grid_eta: int | None):
    beliaev = pair_density(params, "beliaev")
    landau = pair_density(
        params, "landau", num_omega=beliaev.omega.size, omega_max=beliaev.omega[-1]
    )
    rows = [
        [w, db, dl]
        for w, db, dl in zip(beliaev.omega, beliaev.density, landau.density)
    ]
    return ["omega", "d_beliaev", "d_landau"], rows


def _point_rows(params: ModelParams, grid_eta: int | None):
    point = DampingWorkspace(params).point(params.eta)
    if not point.stable:
        raise DiagonalizationError(
            "no damping point at or beyond the critical coupling "
            f"(eta/eta_c = {point.eta_over_etac:.6g})"
        )
    header = [
        "eta_over_etac",
        "omega_soft",
        "gamma_landau",
        "gamma_beliaev",
        "temperature",
        "epsilon",
    ]
    row = [
        point.eta_over_etac,
        point.omega_soft,
        point.gamma_landau,
        point.gamma_beliaev,
        point.temperature,
        point.epsilon,
    ]
    return header, [row]


_BUILDERS = {
    "sweep-eta": _sweep_rows,
    "bands": _bands_rows,
    "pair-density": _pair_density_rows,
    "point": _point_rows,
}


def run(
    command: str,
    config_path: str | None = None,
    overrides=(),
    out_dir: str = ".",
    grid_eta: int | None = None,
    grid_q: int | None = None,
) -> int:
    """Execute one command; returns the process exit status."""
    start = time.perf_counter()
    if command not in _BUILDERS:
        print(f"error: unknown command: {command}", file=sys.stderr)
        return 2
    try:
        config = load_config(config_path) if config_path else None
        params = resolve(config, parse_overrides(overrides))
        if grid_q is not None:
            params = replace(params, zone_points=grid_q)
        if grid_eta is not None and grid_eta < 2:
            raise ParameterError("--grid-eta must be at least 2")
        header, rows = _BUILDERS[command](params, grid_eta)
    except (ConfigError, ParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DiagonalizationError, SoftModeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4

    stem = command.replace("-", "_")
    manifest = RunManifest(
        command=command,
        version=__version__,
        params=params,
        grid_eta=(grid_eta or _DEFAULT_ETA_POINTS) if command == "sweep-eta" else None,
        grid_q=params.zone_points,
        eta_c=critical_coupling(params),
        duration_seconds=time.perf_counter() - start,
    )
    try:
        os.makedirs(out_dir, exist_ok=True)
        _write_csv(os.path.join(out_dir, stem + ".csv"), header, rows)
        with open(
            os.path.join(out_dir, stem + ".manifest.txt"),
            "w",
            encoding="utf-8",
            newline="\n",
        ) as handle:
            handle.write("\n".join(manifest.lines()) + "\n")
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polariton-decay",
        description="Soft-polariton spectrum and damping-rate sweeps",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", default=None, help="key=value parameter file")
        p.add_argument(
            "--set",
            dest="overrides",
            action="append",
            default=[],
            metavar="KEY=VALUE",
            help="override one parameter (repeatable)",
        )
        p.add_argument("--out", default=".", help="output directory")
        p.add_argument(
            "--grid-q", type=int, default=None, help="half-zone grid points"
        )
        if name == "sweep-eta":
            p.add_argument(
                "--grid-eta",
                type=int,
                default=None,
                help=f"drive grid points (default {_DEFAULT_ETA_POINTS})",
            )
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return run(
        command=args.command,
        config_path=args.config,
        overrides=args.overrides,
        out_dir=args.out,
        grid_eta=getattr(args, "grid_eta", None),
        grid_q=args.grid_q,
    )


if __name__ == "__main__":
    sys.exit(main())
