"""Bogoliubov spectrum and drive-tunable damping of a cavity soft polariton.

Units: recoil frequency, cavity wavenumber, and hbar equal one.  The public
surface mirrors the module layout: params (configuration), bogoliubov_core
(quadratic sectors), spectrum (bands, pair densities), vertices (cubic
tensors), damping (golden-rule rates), cli_io (command line).
"""

__version__ = "0.1.0"

from .params import (
    ConfigError,
    ModelParams,
    ParameterError,
    critical_coupling,
    effective_detuning,
    load_config,
    parse_overrides,
    resolve,
    validate,
)
from .bogoliubov_core import (
    DiagonalizationError,
    ModeSet,
    QuadraticForm,
    SoftModeError,
    bogoliubov_frequency,
    build_phonon_matrix,
    build_polariton_matrix,
    diagonalize_phonon_grid,
    identify_soft_mode,
    locate_threshold,
    plane_wave_bogoliubov_block,
    polariton_drive_coupling,
    symplectic_diagonalize,
)
from .spectrum import (
    BandStructure,
    PairDensity,
    band_structure,
    band_touch_frequency,
    half_zone_grid,
    lorentzian,
    minimize_pair_energy,
    pair_density,
    shell_weights,
)
from .vertices import (
    DecayAmplitudes,
    VertexTensor,
    build_cubic_tensor,
    to_decay_amplitudes,
)
from .damping import (
    DampingPoint,
    DampingWorkspace,
    beliaev_rate,
    landau_rate,
    sweep_eta,
    thermal_occupation,
)
from .cli_io import RunManifest, run

__all__ = [
    "ConfigError",
    "ModelParams",
    "ParameterError",
    "critical_coupling",
    "effective_detuning",
    "load_config",
    "parse_overrides",
    "resolve",
    "validate",
    "DiagonalizationError",
    "ModeSet",
    "QuadraticForm",
    "SoftModeError",
    "bogoliubov_frequency",
    "build_phonon_matrix",
    "build_polariton_matrix",
    "diagonalize_phonon_grid",
    "identify_soft_mode",
    "locate_threshold",
    "plane_wave_bogoliubov_block",
    "polariton_drive_coupling",
    "symplectic_diagonalize",
    "BandStructure",
    "PairDensity",
    "band_structure",
    "band_touch_frequency",
    "half_zone_grid",
    "lorentzian",
    "minimize_pair_energy",
    "pair_density",
    "shell_weights",
    "DecayAmplitudes",
    "VertexTensor",
    "build_cubic_tensor",
    "to_decay_amplitudes",
    "DampingPoint",
    "DampingWorkspace",
    "beliaev_rate",
    "landau_rate",
    "sweep_eta",
    "thermal_occupation",
    "RunManifest",
    "run",
    "__version__",
]
