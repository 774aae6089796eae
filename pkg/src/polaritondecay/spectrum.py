"""Folded phonon bands and broadened two-phonon spectral densities.

The half zone (0, 1/2] carries three bands per quasi-momentum, obtained by
folding the homogeneous Bogoliubov dispersion over the momenta {q, q+1, q-1}.
The pair densities below integrate Lorentzian-broadened energy-conservation
factors over the zone with a q^2 shell weight, mimicking a three-dimensional
phonon mode count while keeping the one-dimensional bands.
"""

from __future__ import annotations

from dataclasses import dataclass

import math

import numpy as np

from .bogoliubov_core import bogoliubov_frequency, diagonalize_phonon_grid
from .params import ModelParams, ParameterError


def lorentzian(x, epsilon: float):
    """Normalized Lorentzian (epsilon/pi) / (x^2 + epsilon^2)."""
    return (epsilon / math.pi) / (np.square(x) + epsilon * epsilon)


def half_zone_grid(num_points: int) -> np.ndarray:
    """Uniform grid q_i = i/(2 num_points), i = 1..num_points, on (0, 1/2]."""
    if num_points < 2:
        raise ParameterError("half-zone grid needs at least 2 points")
    return 0.5 * np.arange(1, num_points + 1, dtype=float) / num_points


def shell_weights(qs: np.ndarray) -> np.ndarray:
    """Quadrature weights for the normalized shell measure 24 q^2 dq.

    Trapezoidal rule on a uniform grid that starts one step after the origin
    and ends at the zone edge; the origin cell contributes nothing because
    the q^2 factor vanishes there, so the first point carries a full step.
    """
    qs = np.asarray(qs, dtype=float)
    if qs.ndim != 1 or qs.size < 2:
        raise ParameterError("weight grid must be one-dimensional with >= 2 points")
    h = qs[0]
    if h <= 0.0 or not np.allclose(np.diff(qs), h, rtol=1e-10, atol=1e-14):
        raise ParameterError("weight grid must be uniform and start at one step")
    w = np.full(qs.size, h)
    w[-1] = 0.5 * h
    return 24.0 * qs * qs * w


@dataclass(frozen=True)
class BandStructure:
    """Three folded phonon bands over the half zone, ascending per row."""

    qs: np.ndarray
    frequencies: np.ndarray
    gn: float

    @property
    def num_bands(self) -> int:
        return self.frequencies.shape[1]


def band_structure(params: ModelParams) -> BandStructure:
    """Diagonalize the phonon sector on the default half-zone grid.

    Opposite-q bands coincide by parity, so only q > 0 is computed.
    """
    qs = half_zone_grid(params.zone_points)
    freqs, _ = diagonalize_phonon_grid(qs, params)
    return BandStructure(qs=qs, frequencies=freqs, gn=params.gn)


def band_touch_frequency(params: ModelParams) -> float:
    """Frequency where the two upper folded bands meet as q -> 0.

    Both fold down from |p| = 1, so the touching value is the homogeneous
    dispersion at the cavity wavenumber, sqrt(eps_k (eps_k + 2 gn)) with
    eps_k = 1.  It equals the soft polariton frequency at zero drive.
    """
    return float(bogoliubov_frequency(1.0, params.gn))


@dataclass(frozen=True)
class PairDensity:
    """Broadened two-phonon spectral density on a frequency grid.

    which is "beliaev" (band-sum energies, pairs at (q, -q)) or "landau"
    (band-difference energies, pairs at (q, q)); epsilon is the Lorentzian
    half-width used for every channel.
    """

    which: str
    omega: np.ndarray
    density: np.ndarray
    epsilon: float


def _pair_channels(which: str) -> list[tuple[int, int]]:
    if which == "beliaev":
        return [(m, n) for m in range(3) for n in range(3)]
    if which == "landau":
        return [(m, n) for m in range(3) for n in range(3) if m != n]
    raise ParameterError("which must be 'beliaev' or 'landau'")


def pair_density(
    params: ModelParams,
    which: str = "beliaev",
    num_omega: int = 2048,
    omega_max: float | None = None,
) -> PairDensity:
    """Integrate the broadened pair density over the half zone.

    Beliaev channels sum all ordered band pairs at energies
    omega_m(q) + omega_n(q) (the partner phonon sits at -q, whose bands
    coincide with +q); Landau channels use the differences
    omega_n(q) - omega_m(q) over distinct ordered pairs, which keeps the
    physical merge processes and drops the m = n terms that would pile a
    spurious elastic spike at zero frequency.
    """
    channels = _pair_channels(which)
    if num_omega < 2:
        raise ParameterError("num_omega must be at least 2")
    qs = half_zone_grid(params.zone_points)
    weights = shell_weights(qs)
    freqs, _ = diagonalize_phonon_grid(qs, params)
    if omega_max is None:
        omega_max = 2.1 * float(freqs.max())
    omega = np.linspace(0.0, omega_max, num_omega)
    density = np.zeros(num_omega)
    for m, n in channels:
        if which == "beliaev":
            e = freqs[:, m] + freqs[:, n]
        else:
            e = freqs[:, n] - freqs[:, m]
        density += lorentzian(omega[:, None] - e[None, :], params.epsilon) @ weights
    return PairDensity(which=which, omega=omega, density=density, epsilon=params.epsilon)


def minimize_pair_energy(params: ModelParams, lo: float = 1e-6, hi: float = 0.5):
    """Golden-section minimum of the lowest Beliaev pair energy over the zone.

    The two lowest folded bands are the +-q-side images of the homogeneous
    dispersion, so their sum omega_1(q) + omega_2(q) equals
    omega_B(q) + omega_B(1 - q), stationary at the zone edge.  Returns
    (q_min, pair energy) as an independent locator for the density edge.
    """
    gn = params.gn

    def f(q: float) -> float:
        return float(bogoliubov_frequency(q, gn) + bogoliubov_frequency(1.0 - q, gn))

    inv_phi = 0.5 * (math.sqrt(5.0) - 1.0)
    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > 1e-12:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = f(d)
    q_min = 0.5 * (a + b)
    return q_min, f(q_min)
