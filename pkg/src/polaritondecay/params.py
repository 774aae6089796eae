"""Model parameters, validation, and config-file handling.

Units: hbar = 1, momenta in units of the cavity wave number k, energies and
rates in units of the recoil frequency omega_R = k^2/(2m).  A free atom then
has dispersion eps_p = p**2 and the folding point of the phonon bands sits at
the zone edge q = 1/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields


class ParameterError(ValueError):
    """Raised when a parameter set violates a model invariant."""


class ConfigError(ValueError):
    """Raised when a config file or override string cannot be parsed."""


@dataclass(frozen=True)
class ModelParams:
    """Physical and numerical parameters of the driven-cavity condensate.

    Attributes
    ----------
    delta_c : float
        Bare cavity detuning Delta_C; the operating regime has the shifted
        detuning ``delta_c - u0*n_c/2`` negative (red detuned).
    eta : float
        Collective drive strength in recoil units; the soft mode reaches zero
        frequency at ``critical_coupling(params)``.
    u0 : float
        Single-atom dispersive shift U_0.  Enters the quadratic model only
        through the shifted detuning.
    gn : float
        Condensate interaction energy g*n.
    n_c : float
        Condensate atom number.  Decay rates scale as 1/n_c; the quadratic
        spectrum does not depend on it.
    length : float
        Quantization length in units of 1/k.  Physically inert once gn and
        n_c are fixed (g and n only ever appear through their product), kept
        explicit so rescaling invariance can be checked.
    temperature : float
        k_B*T in recoil units.
    epsilon : float
        Half-width of the Lorentzian used to broaden energy conservation in
        golden-rule integrals.
    zone_points : int
        Number of relative-momentum grid points on the half zone (0, 1/2].
    """

    delta_c: float = -1000.0
    eta: float = 0.0
    u0: float = 0.0
    gn: float = 0.1
    n_c: float = 1.0e4
    length: float = 1000.0
    temperature: float = 0.01
    epsilon: float = 0.1
    zone_points: int = 4096

    def __post_init__(self) -> None:
        if self.gn < 0:
            raise ParameterError("gn must be nonnegative")
        if self.eta < 0:
            raise ParameterError("eta must be nonnegative")
        if self.n_c < 1:
            raise ParameterError("n_c must be at least 1")
        if self.length < 1:
            raise ParameterError("length must be at least 1")
        if self.temperature < 0:
            raise ParameterError("temperature must be nonnegative")
        if self.epsilon <= 0:
            raise ParameterError("epsilon must be positive")
        if not isinstance(self.zone_points, int) or self.zone_points < 16:
            raise ParameterError("zone_points must be an integer of at least 16")
        if effective_detuning(self) >= 0:
            raise ParameterError(
                "nonnegative-detuning: no normal-phase threshold exists "
                f"(effective detuning {effective_detuning(self):.6g} must be negative)"
            )


def validate(params: ModelParams) -> ModelParams:
    """Return the record unchanged if every invariant holds.

    Invariants are enforced at construction, so this re-runs them for records
    arriving from callers that bypass the constructor (e.g. pickles).
    """
    ModelParams(**{f.name: getattr(params, f.name) for f in fields(ModelParams)})
    return params


def effective_detuning(params: ModelParams) -> float:
    """Shifted cavity detuning delta_C = Delta_C - U_0*n_c/2."""
    return params.delta_c - params.u0 * params.n_c / 2.0


def critical_coupling(params: ModelParams) -> float:
    """Drive strength at which the soft polariton mode reaches zero frequency.

    In recoil units eta_c = sqrt(-delta_C) with delta_C the effective
    detuning.  Only defined in the red-detuned regime delta_C < 0.
    """
    det = effective_detuning(params)
    if det >= 0:
        raise ParameterError(
            "nonnegative-detuning: no normal-phase threshold exists "
            f"(effective detuning {det:.6g} must be negative)"
        )
    return math.sqrt(-det)


_FIELD_TYPES = {f.name: f.type for f in fields(ModelParams)}


def _coerce(key: str, value: str):
    if key == "zone_points":
        try:
            return int(value)
        except ValueError:
            raise ConfigError(f"invalid value for {key}: {value!r}") from None
    try:
        return float(value)
    except ValueError:
        raise ConfigError(f"invalid value for {key}: {value!r}") from None


def parse_overrides(items) -> dict:
    """Parse ``key=value`` strings (as from repeated --set flags)."""
    out = {}
    for item in items:
        if "=" not in item:
            raise ConfigError(f"override must look like key=value, got {item!r}")
        key, _, value = item.partition("=")
        key = key.strip()
        if key not in _FIELD_TYPES:
            raise ConfigError(f"unknown parameter: {key}")
        if key in out:
            raise ConfigError(f"duplicate parameter: {key}")
        out[key] = _coerce(key, value.strip())
    return out


def load_config(path) -> dict:
    """Read a key=value config file.

    Blank lines and lines starting with '#' are ignored.  Keys must be
    ModelParams field names; duplicates and unknown keys are errors.
    """
    out = {}
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected key=value, got {line!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            if key not in _FIELD_TYPES:
                raise ConfigError(f"{path}:{lineno}: unknown parameter: {key}")
            if key in out:
                raise ConfigError(f"{path}:{lineno}: duplicate parameter: {key}")
            out[key] = _coerce(key, value.strip())
    return out


def resolve(config: dict | None = None, overrides: dict | None = None) -> ModelParams:
    """Build ModelParams from defaults, then config-file values, then overrides."""
    merged = {}
    if config:
        merged.update(config)
    if overrides:
        merged.update(overrides)
    return ModelParams(**merged)
