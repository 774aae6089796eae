"""Golden-rule damping rates: occupations, scaling laws, sweep bookkeeping.

Coarse zone grids (512-1024 points) keep these fast; the grid-refinement test
certifies that the coarse values already sit within a fraction of a percent
of the converged ones.
"""

import math
from dataclasses import replace

import numpy as np
import pytest

from polaritondecay.bogoliubov_core import DiagonalizationError
from polaritondecay.damping import (
    DampingWorkspace,
    beliaev_rate,
    landau_rate,
    sweep_eta,
    thermal_occupation,
)
from polaritondecay.params import ModelParams, ParameterError, critical_coupling

PARAMS = ModelParams(zone_points=1024)
ETA_C = critical_coupling(PARAMS)


@pytest.fixture(scope="module")
def workspace():
    return DampingWorkspace(PARAMS)


def test_thermal_occupation_reference_values():
    assert thermal_occupation(1.0, 1.0) == pytest.approx(1.0 / (math.e - 1.0), rel=1e-12)
    assert thermal_occupation(1.0, 0.1) == pytest.approx(
        1.0 / (math.exp(10.0) - 1.0), rel=1e-12
    )
    assert thermal_occupation(1.0, 0.0) == 0.0
    assert thermal_occupation(0.5, 0.5) == pytest.approx(1.0 / (math.e - 1.0), rel=1e-12)


def test_point_matches_module_level_rates(workspace):
    eta = 0.8 * ETA_C
    point = workspace.point(eta)
    params = replace(PARAMS, eta=eta)
    assert beliaev_rate(params) == point.gamma_beliaev
    assert landau_rate(params) == point.gamma_landau
    assert point.eta_over_etac == pytest.approx(0.8, rel=1e-12)
    assert point.stable


def test_zone_grid_refinement_changes_rates_little(workspace):
    eta = 0.8 * ETA_C
    coarse = workspace.point(eta).gamma_beliaev
    fine = DampingWorkspace(ModelParams(zone_points=2048)).point(eta).gamma_beliaev
    assert abs(coarse - fine) / fine < 0.02


def test_doubling_condensate_number_halves_rates(workspace):
    eta = 0.8 * ETA_C
    base = workspace.point(eta, temperature=0.5)
    doubled = workspace.point(eta, temperature=0.5, n_c=2.0 * PARAMS.n_c)
    assert doubled.gamma_beliaev / base.gamma_beliaev == pytest.approx(0.5, abs=0.005)
    assert doubled.gamma_landau / base.gamma_landau == pytest.approx(0.5, abs=0.005)


def test_landau_rate_vanishes_exactly_at_zero_temperature(workspace):
    point = workspace.point(0.8 * ETA_C, temperature=0.0)
    assert point.gamma_landau == 0.0
    assert point.gamma_beliaev > 0.0


def test_landau_rate_grows_with_temperature(workspace):
    eta = 0.95 * ETA_C
    rates = [workspace.point(eta, temperature=t).gamma_landau for t in (0.2, 0.5, 1.0)]
    assert rates[0] < rates[1] < rates[2]
    assert rates[0] > 0.0


def test_sweep_is_deterministic(workspace):
    grid = workspace.default_eta_grid(16)
    first = workspace.sweep(grid)
    second = DampingWorkspace(PARAMS).sweep(grid)
    for a, b in zip(first, second):
        assert a.gamma_beliaev == b.gamma_beliaev
        assert a.gamma_landau == b.gamma_landau
        assert a.omega_soft == b.omega_soft


def test_sweep_marks_unstable_points_instead_of_raising(workspace):
    grid = np.array([0.5 * ETA_C, 1.2 * ETA_C])
    points = workspace.sweep(grid)
    assert points[0].stable
    assert not points[1].stable
    assert math.isnan(points[1].gamma_beliaev)
    assert math.isnan(points[1].omega_soft)
    with pytest.raises(DiagonalizationError):
        beliaev_rate(replace(PARAMS, eta=1.2 * ETA_C))


def test_default_eta_grid_spans_stable_window(workspace):
    grid = workspace.default_eta_grid(50)
    assert grid.size == 50
    assert grid[0] == 0.0
    assert grid[-1] == pytest.approx(0.99 * ETA_C, rel=1e-12)
    with pytest.raises(ParameterError):
        workspace.default_eta_grid(1)


def test_point_override_validation(workspace):
    with pytest.raises(ParameterError):
        workspace.point(0.5 * ETA_C, temperature=-0.1)
    with pytest.raises(ParameterError):
        workspace.point(0.5 * ETA_C, epsilon=0.0)
    with pytest.raises(ParameterError):
        workspace.point(0.5 * ETA_C, n_c=0.0)


def test_rates_vanish_without_cubic_couplings():
    params = ModelParams(gn=0.0, eta=0.0, zone_points=64)
    point = DampingWorkspace(params).point(0.0, temperature=0.5)
    assert point.gamma_beliaev == 0.0
    assert point.gamma_landau == 0.0


def test_drive_vertex_switch_changes_rates(workspace):
    eta = 0.8 * ETA_C
    with_drive = DampingWorkspace(PARAMS, include_drive=True).point(eta)
    contact_only = workspace.point(eta)
    assert with_drive.gamma_beliaev > contact_only.gamma_beliaev
    assert np.all(workspace.drive_unit == 0.0)


def test_sweep_eta_convenience_wrapper():
    params = ModelParams(zone_points=512)
    grid = np.linspace(0.0, 0.5 * critical_coupling(params), 4)
    points = sweep_eta(params, grid)
    ws_points = DampingWorkspace(params).sweep(grid)
    assert [p.gamma_beliaev for p in points] == [p.gamma_beliaev for p in ws_points]
