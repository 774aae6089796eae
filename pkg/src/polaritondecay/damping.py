"""Golden-rule Landau and Beliaev damping rates of the soft polariton.

Rates are Lorentzian-broadened golden-rule integrals over the phonon
continuum with the normalized q^2 shell measure of module spectrum:

  gamma_B = (2 pi / N_c) sum_{m<=n} S_mn int w(q) |M_B[m,n]|^2
            delta_eps(omega_s - omega_m - omega_n) (1 + nbar_m + nbar_n) dq,
  gamma_L = (2 pi / N_c) sum_{m<n}  int w(q) |M_L[m,n]|^2
            delta_eps(omega_s + omega_m - omega_n) (nbar_m - nbar_n) dq,

with the symmetry factor S_mn = 1/2 for m = n.  The Beliaev sum is evaluated
as half the ordered double sum, which equals the form above because
|M_B[m,n]| = |M_B[n,m]| by parity.  Landau channels keep only the upward
merges (omega_n > omega_m), which makes the rate channel-wise nonnegative;
the -q-side merge has equal magnitude by parity and is absorbed in the
overall scale convention.  The absolute normalization is the bare golden
rule; no calibrated vertical scale is claimed.

By default the amplitudes M are built from the contact vertex alone: the
damping is the intrinsic s-wave scattering process, and with the contact
vertex the rate peak sits exactly where omega_soft crosses the argmax of the
two-phonon density (the van Hove mechanism) and collapses below it.  The
pump-mediated cubic vertex grows linearly with eta and, if included, skews
the resonance toward threshold; it is available through include_drive=True
for sensitivity studies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .bogoliubov_core import (
    DiagonalizationError,
    build_polariton_matrix,
    diagonalize_phonon_grid,
    identify_soft_mode,
    symplectic_diagonalize,
)
from .params import ModelParams, ParameterError, critical_coupling, validate
from .spectrum import half_zone_grid, lorentzian, shell_weights
from .vertices import cubic_contact_tensor, cubic_drive_tensor


def thermal_occupation(omega: float, t: float) -> float:
    """Bose-Einstein occupation 1/(exp(omega/t) - 1); zero at t = 0."""
    if omega <= 0.0:
        raise ParameterError("thermal occupation needs omega > 0")
    if t < 0.0:
        raise ParameterError("temperature must be nonnegative")
    if t == 0.0:
        return 0.0
    x = math.exp(-omega / t)
    return x / (1.0 - x)


def _occupations(frequencies: np.ndarray, t: float) -> np.ndarray:
    """Vectorized thermal_occupation over an array of positive frequencies."""
    if t == 0.0:
        return np.zeros_like(frequencies)
    x = np.exp(-frequencies / t)
    return x / (1.0 - x)


@dataclass(frozen=True)
class DampingPoint:
    """Soft-mode frequency and damping rates at one drive strength.

    stable=False marks drive strengths at or beyond the critical coupling,
    where the normal phase has no soft mode; the rates are NaN there.
    """

    eta_over_etac: float
    omega_soft: float
    gamma_landau: float
    gamma_beliaev: float
    temperature: float
    epsilon: float
    stable: bool = True


class DampingWorkspace:
    """Precomputed phonon grid data shared by all drive strengths.

    The phonon bands, Bogoliubov transforms, shell weights, and cubic tensors
    depend only on gn and the grid, not on eta, T, epsilon, or N_c, so one
    workspace serves a whole sweep.  include_drive=True adds the pump-mediated
    cubic vertex (sensitivity switch, see module docstring).
    """

    def __init__(self, params: ModelParams, include_drive: bool = False) -> None:
        validate(params)
        self.params = params
        self.include_drive = include_drive
        self.eta_c = critical_coupling(params)
        self.qs = half_zone_grid(params.zone_points)
        self.weights = shell_weights(self.qs)
        self.band_frequencies, self.band_transforms = diagonalize_phonon_grid(
            self.qs, params
        )
        self.contact = cubic_contact_tensor(params)
        unit = cubic_drive_tensor(replace(params, eta=1.0))
        self.drive_unit = unit if include_drive else np.zeros_like(unit)

    def soft_mode(self, eta: float):
        """(frequency, slot-basis vector) of the soft mode at drive eta."""
        form = build_polariton_matrix(replace(self.params, eta=eta))
        modes = symplectic_diagonalize(form)
        if not modes.stable:
            return None
        index, modes = identify_soft_mode(modes)
        return float(modes.frequencies[index]), modes.transform[:, 2 * index]

    def point(
        self,
        eta: float,
        temperature: float | None = None,
        epsilon: float | None = None,
        n_c: float | None = None,
    ) -> DampingPoint:
        """Damping rates at one drive strength, with optional overrides.

        Overrides exist because T, epsilon, and N_c enter only the final
        integral, not the precomputed grid data.
        """
        t = self.params.temperature if temperature is None else float(temperature)
        eps = self.params.epsilon if epsilon is None else float(epsilon)
        nc = self.params.n_c if n_c is None else float(n_c)
        if t < 0.0:
            raise ParameterError("temperature must be nonnegative")
        if eps <= 0.0:
            raise ParameterError("epsilon must be positive")
        if nc < 1.0:
            raise ParameterError("n_c must be at least 1")

        soft = self.soft_mode(eta)
        ratio = eta / self.eta_c
        if soft is None:
            return DampingPoint(
                eta_over_etac=ratio,
                omega_soft=math.nan,
                gamma_landau=math.nan,
                gamma_beliaev=math.nan,
                temperature=t,
                epsilon=eps,
                stable=False,
            )
        omega_s, u_soft = soft

        # drive_unit was built at eta = 1, so the tensor scales linearly in eta
        amps = self.contact
        if self.include_drive:
            amps = amps + eta * self.drive_unit
        # X_q = U_q^dag (C . u_soft) U_q over the whole grid at once
        c2 = np.einsum("mab,m->ab", amps, u_soft)
        u = self.band_transforms
        x = np.conj(np.swapaxes(u, 1, 2)) @ c2[None] @ u
        beliaev = x[:, 0::2, 1::2]
        landau = np.swapaxes(x[:, 0::2, 0::2], 1, 2)

        freqs = self.band_frequencies
        nbar = _occupations(freqs, t)
        prefactor = 2.0 * math.pi / nc

        # Beliaev: half the ordered sum = sum over m<=n with 1/2 on m=n
        e_sum = freqs[:, :, None] + freqs[:, None, :]
        bose = 1.0 + nbar[:, :, None] + nbar[:, None, :]
        kern_b = np.abs(beliaev) ** 2 * lorentzian(omega_s - e_sum, eps) * bose
        gamma_b = 0.5 * prefactor * float(self.weights @ kern_b.sum(axis=(1, 2)))

        gamma_l = 0.0
        if t > 0.0:
            kern_l = np.zeros(freqs.shape[0])
            for m in range(3):
                for n in range(m + 1, 3):
                    diff = freqs[:, n] - freqs[:, m]
                    kern_l += (
                        np.abs(landau[:, m, n]) ** 2
                        * lorentzian(omega_s - diff, eps)
                        * (nbar[:, m] - nbar[:, n])
                    )
            gamma_l = prefactor * float(self.weights @ kern_l)

        return DampingPoint(
            eta_over_etac=ratio,
            omega_soft=omega_s,
            gamma_landau=gamma_l,
            gamma_beliaev=gamma_b,
            temperature=t,
            epsilon=eps,
            stable=True,
        )

    def default_eta_grid(self, num_points: int = 200) -> np.ndarray:
        """Uniform drive grid on [0, 0.99 eta_c], resolution for the sweep."""
        if num_points < 2:
            raise ParameterError("eta grid needs at least 2 points")
        return np.linspace(0.0, 0.99 * self.eta_c, num_points)

    def sweep(
        self,
        eta_grid: np.ndarray | None = None,
        temperature: float | None = None,
        epsilon: float | None = None,
        n_c: float | None = None,
    ) -> list[DampingPoint]:
        """Damping points over a drive grid, in grid order.

        Grid points at or beyond the critical coupling are marked unstable
        instead of aborting the sweep.
        """
        if eta_grid is None:
            eta_grid = self.default_eta_grid()
        return [
            self.point(float(eta), temperature=temperature, epsilon=epsilon, n_c=n_c)
            for eta in np.asarray(eta_grid, dtype=float)
        ]


def sweep_eta(params: ModelParams, eta_grid=None) -> list[DampingPoint]:
    """Damping sweep over drive strength with params' T and epsilon."""
    return DampingWorkspace(params).sweep(eta_grid)


def _single_point(params: ModelParams) -> DampingPoint:
    point = DampingWorkspace(params).point(params.eta)
    if not point.stable:
        raise DiagonalizationError(
            "no damping rates at or beyond the critical coupling"
        )
    return point


def beliaev_rate(params: ModelParams) -> float:
    """gamma_B at params.eta; raises when the drive is at/beyond threshold."""
    return _single_point(params).gamma_beliaev


def landau_rate(params: ModelParams) -> float:
    """gamma_L at params.eta; raises when the drive is at/beyond threshold."""
    return _single_point(params).gamma_landau
