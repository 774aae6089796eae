"""Cubic vertex tensors and their quasi-particle-basis decay amplitudes."""

import math
from dataclasses import replace

import numpy as np
import pytest

from polaritondecay.bogoliubov_core import (
    SoftModeError,
    build_phonon_matrix,
    build_polariton_matrix,
    symplectic_diagonalize,
)
from polaritondecay.params import ModelParams, ParameterError, critical_coupling
from polaritondecay.vertices import (
    _contact_plane_wave_tensor,
    _drive_plane_wave_tensor,
    build_cubic_tensor,
    cubic_contact_tensor,
    cubic_drive_tensor,
    rotate_cubic_tensor,
    to_decay_amplitudes,
)

PARAMS = ModelParams()
ETA_C = critical_coupling(PARAMS)
MU_SWAP = (1, 0, 3, 2, 5, 4, 7, 6)


def hermiticity_error(c: np.ndarray) -> float:
    partner = np.conj(c[MU_SWAP, :, :].transpose(0, 2, 1))
    return float(np.max(np.abs(c - partner)))


def make_amplitudes(eta_frac: float, q: float, include_drive: bool = True):
    params = replace(PARAMS, eta=eta_frac * ETA_C)
    pol = symplectic_diagonalize(build_polariton_matrix(params))
    ph = symplectic_diagonalize(build_phonon_matrix(q, params))
    tensor = build_cubic_tensor(q, params, include_drive=include_drive)
    return to_decay_amplitudes(tensor, pol, ph)


def test_plane_wave_tensor_entry_counts():
    # 7 pair-creation monomials plus 2 x 7 transfer monomials, doubled by the
    # conjugate partners; the drive hops give 4 x 2 sides x 2 photon slots
    assert np.count_nonzero(_contact_plane_wave_tensor(0.1)) == 42
    assert np.count_nonzero(_drive_plane_wave_tensor()) == 16


def test_tensors_are_hermitian_in_all_bases():
    assert hermiticity_error(_contact_plane_wave_tensor(0.1)) == 0.0
    assert hermiticity_error(_drive_plane_wave_tensor()) == 0.0
    assert hermiticity_error(cubic_contact_tensor(PARAMS)) < 1e-14
    assert hermiticity_error(cubic_drive_tensor(replace(PARAMS, eta=1.0))) < 1e-14


def test_amplitudes_scale_linearly_in_couplings():
    doubled = cubic_contact_tensor(replace(PARAMS, gn=0.2))
    assert np.max(np.abs(doubled - 2.0 * cubic_contact_tensor(PARAMS))) == 0.0
    one = cubic_drive_tensor(replace(PARAMS, eta=1.0))
    two = cubic_drive_tensor(replace(PARAMS, eta=2.0))
    assert np.max(np.abs(two - 2.0 * one)) == 0.0


def test_vertices_vanish_without_couplings():
    params = ModelParams(gn=0.0, eta=0.0)
    tensor = build_cubic_tensor(0.3, params, include_drive=True)
    assert np.all(tensor.amplitudes == 0.0)


def test_build_cubic_tensor_validates_momentum_and_prefactor():
    tensor = build_cubic_tensor(0.25, PARAMS)
    assert tensor.q == 0.25
    assert tensor.prefactor == pytest.approx(1.0 / math.sqrt(PARAMS.n_c), rel=1e-14)
    for q in (0.0, -0.2, 0.7):
        with pytest.raises(ParameterError):
            build_cubic_tensor(q, PARAMS)


def test_rotate_cubic_tensor_matches_explicit_contraction():
    params = replace(PARAMS, eta=0.4 * ETA_C)
    tensor = build_cubic_tensor(0.2, params)
    pol = symplectic_diagonalize(build_polariton_matrix(params))
    ph = symplectic_diagonalize(build_phonon_matrix(0.2, params))
    u_soft = pol.transform[:, 2 * 1]
    x = rotate_cubic_tensor(tensor.amplitudes, u_soft, ph.transform)
    ref = np.zeros((6, 6), dtype=complex)
    for mu in range(8):
        for a in range(6):
            for b in range(6):
                # X[i, j] sums conj(U[a, i]) C2[a, b] U[b, j] over a, b
                ref += (
                    tensor.amplitudes[mu, a, b]
                    * u_soft[mu]
                    * np.outer(ph.transform[a, :].conj(), ph.transform[b, :])
                )
    assert np.max(np.abs(x - ref)) < 1e-10


def test_decay_amplitude_parity_invariants():
    amps = make_amplitudes(0.5, 0.3)
    b = np.abs(amps.beliaev)
    assert np.max(np.abs(b - b.T)) < 1e-12
    assert np.max(np.abs(np.abs(amps.landau) - np.abs(amps.landau_neg))) < 1e-12


def test_momentum_selection_rules():
    # each folded band carries a definite plane-wave momentum pair, so the
    # same-band Beliaev channels (pair momentum 0 couples only to the
    # decoupled b0 leg), the optical-optical Beliaev channel (needs a +-2k
    # leg), and the optical-optical Landau channel all vanish identically
    for frac, q in ((0.5, 0.3), (0.9, 0.45)):
        amps = make_amplitudes(frac, q)
        scale = np.max(np.abs(amps.beliaev))
        assert scale > 0.0
        assert np.max(np.abs(np.diag(amps.beliaev))) < 1e-12 * scale
        assert abs(amps.beliaev[1, 2]) < 1e-12 * scale
        assert abs(amps.beliaev[2, 1]) < 1e-12 * scale
        assert abs(amps.landau[1, 2]) < 1e-12 * scale
        assert abs(amps.landau[2, 1]) < 1e-12 * scale


def test_acoustic_channels_are_active():
    amps = make_amplitudes(0.8, 0.42)
    assert abs(amps.beliaev[0, 1]) > 1e-3
    assert abs(amps.beliaev[0, 2]) > 1e-3
    assert abs(amps.landau[0, 1]) > 1e-3
    assert abs(amps.landau[0, 2]) > 1e-3


def test_decay_amplitudes_validates_mode_sets():
    unstable_params = replace(PARAMS, eta=1.5 * ETA_C)
    pol_bad = symplectic_diagonalize(build_polariton_matrix(unstable_params))
    ph = symplectic_diagonalize(build_phonon_matrix(0.3, PARAMS))
    tensor = build_cubic_tensor(0.3, PARAMS)
    with pytest.raises(SoftModeError):
        to_decay_amplitudes(tensor, pol_bad, ph)
    pol = symplectic_diagonalize(build_polariton_matrix(PARAMS))
    ph_other = symplectic_diagonalize(
        build_phonon_matrix(0.1, PARAMS)
    )  # different spectrum in the -q slot
    with pytest.raises(ParameterError):
        to_decay_amplitudes(tensor, pol, ph, ph_negq=ph_other)
