"""Cubic interaction tensors coupling one q=0 mode to two phonons.

The cubic Hamiltonian restricted to one polariton leg and two phonon legs at
quasi-momenta (+q, -q) is stored as

    H_3(q) = (1/sqrt(N_c)) sum_{mu,alpha,beta} C[mu,alpha,beta]
             P_mu  w_alpha(q)^dag  w_beta(q),

where P is the 8-slot polariton vector and w the 6-slot phonon pair vector of
bogoliubov_core.  The pair basis holds annihilation operators on the +q side
and creation operators on the -q side, so w^dag w products reach every
momentum-conserving operator pair; reversed-order same-mode products differ
from normal order by c-numbers only, which shift the mean field and are
dropped.  Amplitudes carry the collective scales (2 gn for the contact term,
lambda for the drive term); the 1/sqrt(N_c) prefactor is kept separate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bogoliubov_core import (
    ModeSet,
    SoftModeError,
    identify_soft_mode,
    phonon_bloch_rotation,
    polariton_bloch_rotation,
    polariton_drive_coupling,
)
from .params import ModelParams, ParameterError

_INV_SQRT2 = 1.0 / math.sqrt(2.0)

# plane-wave slot maps.  Phonon pair vector at quasi-momentum q:
# (b_q, b_-q^dag, b_q+1, b_-q-1^dag, b_q-1, b_-q+1^dag); the keys are the
# integer momentum offsets from +-q.  Polariton vector:
# (a, a^dag, b_0, b_0^dag, b_+1, b_+1^dag, b_-1, b_-1^dag).
_PLUS_SLOT = {0: 0, 1: 2, -1: 4}
_MINUS_SLOT = {0: 1, -1: 3, 1: 5}
_POL_ANN = {0: 2, 1: 4, -1: 6}
_MU_SWAP = (1, 0, 3, 2, 5, 4, 7, 6)
_OFFSETS = (-1, 0, 1)


def _hermitize(c: np.ndarray) -> np.ndarray:
    """Add the conjugate partner of every term.

    Hermiticity of sum C[mu,a,b] P_mu w_a^dag w_b requires
    C[mu~, b, a] = conj(C[mu, a, b]) with mu~ the conjugate polariton slot.
    The generator sets below never collide with their partners, so this
    doubles the entry count exactly.
    """
    return c + np.conj(c[_MU_SWAP, :, :].transpose(0, 2, 1))


def _contact_plane_wave_tensor(gn: float) -> np.ndarray:
    """Contact-interaction cubic tensor in the plane-wave slot basis.

    One factor of the quartic contact term is replaced by the condensate
    amplitude sqrt(N_c); collecting the combinatorial factors leaves every
    momentum-conserving polariton-phonon-phonon monomial with coefficient
    2 gn / sqrt(N_c).  Two families arise: the polariton operator carries the
    summed momentum of a (+q, -q) phonon pair, or it transfers momentum to a
    single phonon side.
    """
    c = np.zeros((8, 6, 6), dtype=complex)
    amp = 2.0 * gn
    # polariton annihilation b_{a+b} with phonon creations b^dag_{q+a} b^dag_{-q+b}
    for a in _OFFSETS:
        for b in _OFFSETS:
            if abs(a + b) > 1:
                continue
            c[_POL_ANN[a + b], _PLUS_SLOT[a], _MINUS_SLOT[b]] += amp
    # polariton creation b^dag_{off} absorbing momentum from one phonon side:
    # b^dag_{off} b^dag_{q+b} b_{q+b+off} and the -q-side image, which the
    # pair basis stores in reversed (annihilation, creation) order
    for off in _OFFSETS:
        for b in _OFFSETS:
            if abs(b + off) > 1:
                continue
            mu = _POL_ANN[off] + 1
            c[mu, _PLUS_SLOT[b], _PLUS_SLOT[b + off]] += amp
            c[mu, _MINUS_SLOT[b + off], _MINUS_SLOT[b]] += amp
    return _hermitize(c)


def _drive_plane_wave_tensor() -> np.ndarray:
    """Unit-strength drive cubic tensor in the plane-wave slot basis.

    The pump recoil term scatters one phonon by +-1 while creating or
    annihilating a cavity photon; each of the four hops within a phonon
    triplet enters with weight 1/sqrt(2) (the cos(kx) overlap), on both the
    +q and -q sides and for both photon quadrature slots.  The resulting
    tensor is already Hermitian.
    """
    c = np.zeros((8, 6, 6), dtype=complex)
    hops = ((1, 0), (0, -1), (-1, 0), (0, 1))
    for cre, ann in hops:
        for mu in (0, 1):
            c[mu, _PLUS_SLOT[cre], _PLUS_SLOT[ann]] += _INV_SQRT2
            c[mu, _MINUS_SLOT[ann], _MINUS_SLOT[cre]] += _INV_SQRT2
    return c


def _to_bloch(c: np.ndarray) -> np.ndarray:
    """Rotate a plane-wave cubic tensor into the Bloch slot basis.

    With w_bloch = T w_pw on each leg, the mu leg picks up conj(T_pol) and
    the (dagger, plain) phonon legs pick up (T_ph, conj(T_ph)).
    """
    t_pol = polariton_bloch_rotation()
    t_ph = phonon_bloch_rotation()
    return np.einsum("MAB,mM,aA,bB->mab", c, t_pol.conj(), t_ph, t_ph.conj())


_DRIVE_UNIT_BLOCH = _to_bloch(_drive_plane_wave_tensor())


def cubic_contact_tensor(params: ModelParams) -> np.ndarray:
    """Bloch-basis contact tensor (8, 6, 6); q-independent amplitudes."""
    return _to_bloch(_contact_plane_wave_tensor(params.gn))


def cubic_drive_tensor(params: ModelParams) -> np.ndarray:
    """Bloch-basis drive tensor; lambda times the unit hop pattern."""
    return polariton_drive_coupling(params) * _DRIVE_UNIT_BLOCH


@dataclass(frozen=True)
class VertexTensor:
    """Cubic amplitudes C[mu, alpha, beta] at one quasi-momentum.

    amplitudes has shape (8, 6, 6) over (polariton slot, phonon dagger slot,
    phonon plain slot); prefactor holds the separate 1/sqrt(N_c) scale.  The
    amplitudes themselves do not depend on q (the slot maps encode momentum
    offsets, not absolute momenta), but the tensor is tagged with the q it
    belongs to since the transforms contracted against it are q-specific.
    """

    q: float
    amplitudes: np.ndarray
    prefactor: float


def build_cubic_tensor(
    q: float, params: ModelParams, include_drive: bool = True
) -> VertexTensor:
    """Full cubic tensor (contact plus drive) at quasi-momentum q.

    Momentum conservation is built in: every entry couples the q=0 sector to
    a (+q, -q) phonon pair through one dagger-side and one plain-side slot.
    All amplitudes vanish when gn = 0 and eta = 0.  include_drive=False drops
    the pump-mediated vertex for sensitivity studies.
    """
    if not 0.0 < q <= 0.5:
        raise ParameterError("q must lie in the half zone (0, 1/2]")
    amplitudes = cubic_contact_tensor(params)
    if include_drive:
        amplitudes = amplitudes + cubic_drive_tensor(params)
    return VertexTensor(
        q=float(q), amplitudes=amplitudes, prefactor=1.0 / math.sqrt(params.n_c)
    )


@dataclass(frozen=True)
class DecayAmplitudes:
    """Quasi-particle-basis decay amplitudes of the soft mode at one q.

    beliaev[m, n]: soft -> phonon(m, +q) + phonon(n, -q).
    landau[m, n]: soft + phonon(m, +q) -> phonon(n, +q).
    landau_neg[m, n]: same merge process on the -q side; by parity its
    magnitudes match landau and it is kept for diagnostics.
    """

    q: float
    beliaev: np.ndarray
    landau: np.ndarray
    landau_neg: np.ndarray


def rotate_cubic_tensor(
    amplitudes: np.ndarray, u_soft: np.ndarray, u_phonon: np.ndarray
) -> np.ndarray:
    """Contract the mu leg with a soft-mode vector and both phonon legs.

    Returns X[i, j] = sum C[mu,a,b] u_soft[mu] conj(U)[a,i] U[b,j], the
    coefficient of (soft annihilation) x (normal-mode slot_i^dag slot_j).
    """
    c2 = np.einsum("mab,m->ab", amplitudes, u_soft)
    return u_phonon.conj().T @ c2 @ u_phonon


def to_decay_amplitudes(
    tensor: VertexTensor,
    pol: ModeSet,
    ph_q: ModeSet,
    ph_negq: ModeSet | None = None,
    soft_index: int | None = None,
) -> DecayAmplitudes:
    """Rotate the cubic tensor into the quasi-particle basis at one q.

    The phonon pair basis covers both +-q, so ph_negq is redundant; when
    given it must carry the same spectrum (parity).  The soft polariton mode
    is identified as the lowest positive-frequency non-Goldstone mode unless
    soft_index is supplied.  Within X (see rotate_cubic_tensor), the slot
    parities separate the processes: (even, odd) entries multiply two
    creations (Beliaev), (even, even) and (odd, odd) one creation and one
    annihilation on the +q / -q side (Landau), and (odd, even) entries are
    the anti-resonant double annihilations, dropped.
    """
    if not pol.stable or not ph_q.stable:
        raise SoftModeError("decay amplitudes need stable mode sets")
    if ph_negq is not None and not np.allclose(
        ph_negq.frequencies, ph_q.frequencies, rtol=1e-9, atol=1e-9
    ):
        raise ParameterError("phonon spectra at +q and -q must coincide")
    if soft_index is None:
        soft_index, pol = identify_soft_mode(pol)
    u_soft = pol.transform[:, 2 * soft_index]
    x = rotate_cubic_tensor(tensor.amplitudes, u_soft, ph_q.transform)
    beliaev = x[0::2, 1::2].copy()
    landau = x[0::2, 0::2].T.copy()
    landau_neg = x[1::2, 1::2].copy()
    return DecayAmplitudes(
        q=tensor.q, beliaev=beliaev, landau=landau, landau_neg=landau_neg
    )
