"""Quadratic sector: dynamical matrices and their symplectic diagonalization.

Doubled-operator bookkeeping.  Every sector is described by a vector w of 2M
operator slots ordered (mode, conjugate, mode, conjugate, ...).  The metric
sigma = diag(+1, -1, +1, -1, ...) stores the commutators [w_i, w_j^dag], and a
Hermitian coefficient matrix H generates the linear dynamics

    i dw/dt = sigma H w,

so the dynamical matrix is F = sigma H.  Two sector layouts occur:

* polariton sector (M = 4), slots (a, a^dag, b0, b0^dag, c0, c0^dag,
  s0, s0^dag), where every mode sits next to its own conjugate and the
  Hamiltonian is (1/2) w^dag H w with particle-hole symmetric H;
* phonon sector at quasi-momentum q in (0, 1/2] (M = 3), slots
  (b_q, b_-q^dag, c_q, c_-q^dag, s_q, s_-q^dag), a pair basis where each
  slot's conjugate lives at -q and the Hamiltonian is w^dag H w.

Both layouts share F = sigma H and the diagonalization below.  Units follow
params.py: eps_p = p^2, the cosine/sine modes combine plane waves at p +- 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .params import ModelParams, ParameterError, critical_coupling, effective_detuning

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


class DiagonalizationError(RuntimeError):
    """Raised when a quadratic form cannot be brought to normal-mode form."""


class SoftModeError(RuntimeError):
    """Raised when the soft polariton mode cannot be identified."""


def metric(num_modes: int) -> np.ndarray:
    """Commutator signature diag(+1, -1, ...) for 2*num_modes slots."""
    sig = np.ones(2 * num_modes)
    sig[1::2] = -1.0
    return sig


def pair_swap_indices(num_modes: int) -> np.ndarray:
    """Permutation exchanging each slot with its conjugate partner."""
    idx = np.arange(2 * num_modes)
    idx[0::2] += 1
    idx[1::2] -= 1
    return idx


@dataclass(frozen=True)
class QuadraticForm:
    """Dynamical matrix F = sigma H of one quadratic sector.

    matrix is the 2M x 2M complex array F; sigma F must be Hermitian (the
    coefficient matrix of a quadratic Hamiltonian), which is checked at
    construction.  The eigenvalue multiset of F is then symmetric under
    omega -> -omega whenever the form is stable.
    """

    matrix: np.ndarray

    def __post_init__(self) -> None:
        f = np.asarray(self.matrix, dtype=complex)
        object.__setattr__(self, "matrix", f)
        if f.ndim != 2 or f.shape[0] != f.shape[1] or f.shape[0] % 2:
            raise DiagonalizationError("matrix must be square with even size")
        scale = max(1.0, float(np.max(np.abs(f))))
        h = self.metric[:, None] * f
        if np.max(np.abs(h - h.conj().T)) > 1e-10 * scale:
            raise DiagonalizationError("sigma*matrix is not Hermitian")

    @property
    def num_modes(self) -> int:
        return self.matrix.shape[0] // 2

    @property
    def metric(self) -> np.ndarray:
        return metric(self.matrix.shape[0] // 2)

    @property
    def hamiltonian(self) -> np.ndarray:
        """Hermitian coefficient matrix H = sigma F."""
        return self.metric[:, None] * self.matrix


@dataclass(frozen=True)
class ModeSet:
    """Normal modes of one sector.

    frequencies: (M,) nonnegative, ascending, Goldstone zeros first.
    transform:   (2M, 2M) Bogoliubov matrix U with U^dag sigma U = sigma;
                 column 2m holds the +omega_m (annihilation-type, sigma-norm
                 +1) vector of mode m and column 2m+1 its -omega_m partner
                 (creation-type, sigma-norm -1); None when unstable.
    stable:      False when the form is dynamically unstable (or pairing of
                 +-omega eigenvalues failed); frequencies then hold real parts.
    goldstone:   (M,) mask of zero modes excluded from damping bookkeeping.
    """

    frequencies: np.ndarray
    transform: np.ndarray | None
    stable: bool
    goldstone: np.ndarray

    @property
    def num_modes(self) -> int:
        return self.frequencies.shape[0]

    def mode_vector(self, index: int) -> np.ndarray:
        """Annihilation-type column of mode `index` in the slot basis."""
        if self.transform is None:
            raise DiagonalizationError("unstable mode set has no transform")
        return self.transform[:, 2 * index]


def plane_wave_bogoliubov_block(p: float, gn: float) -> np.ndarray:
    """Hermitian 2x2 coefficient block of the pair (b_p, b_-p^dag).

    Diagonal eps_p + gn with eps_p = p^2, anomalous coupling gn.  Its
    dynamical eigenvalues are +-omega_B(p) = +-sqrt(eps_p (eps_p + 2 gn)).
    """
    eps = p * p
    return np.array([[eps + gn, gn], [gn, eps + gn]], dtype=complex)


def bogoliubov_frequency(p, gn: float):
    """Closed-form homogeneous dispersion omega_B(p) = sqrt(eps_p(eps_p+2gn))."""
    eps = np.square(p)
    return np.sqrt(eps * (eps + 2.0 * gn))


def phonon_bloch_rotation() -> np.ndarray:
    """Unitary mapping plane-wave pair slots to (b, c, s) Bloch pair slots.

    Plane-wave order (b_q, b_-q^dag, b_q+1, b_-q-1^dag, b_q-1, b_-q+1^dag).
    The creation slots carry the same coefficients as the annihilation slots
    because the momentum offsets flip sign twice between q and -q partners.
    """
    r = np.array(
        [
            [1.0, 0.0, 0.0],
            [0.0, _INV_SQRT2, _INV_SQRT2],
            [0.0, -1j * _INV_SQRT2, 1j * _INV_SQRT2],
        ]
    )
    return np.kron(r, np.eye(2))


def polariton_bloch_rotation() -> np.ndarray:
    """Unitary mapping the q=0 plane-wave slots to (a, b0, c0, s0) slots.

    Plane-wave order (a, a^dag, b_0, b_0^dag, b_+1, b_+1^dag, b_-1, b_-1^dag).
    Unlike the phonon case the conjugate slots here hold daggers of the same
    momenta, so the creation rows are the complex conjugates of the
    annihilation rows.
    """
    s = _INV_SQRT2
    t = np.zeros((8, 8), dtype=complex)
    t[0, 0] = 1.0
    t[1, 1] = 1.0
    t[2, 2] = 1.0
    t[3, 3] = 1.0
    t[4, 4] = s
    t[4, 6] = s
    t[5, 5] = s
    t[5, 7] = s
    t[6, 4] = -1j * s
    t[6, 6] = 1j * s
    t[7, 5] = 1j * s
    t[7, 7] = -1j * s
    return t


def _form_from_hamiltonian(h: np.ndarray) -> QuadraticForm:
    m = h.shape[0] // 2
    return QuadraticForm(matrix=metric(m)[:, None] * h)


def _phonon_plane_wave_hamiltonian(q, gn: float) -> np.ndarray:
    """Stacked 6x6 pair-basis Hamiltonians over momenta (q, q+1, q-1)."""
    qs = np.atleast_1d(np.asarray(q, dtype=float))
    h = np.zeros((qs.size, 6, 6), dtype=complex)
    for k, p in enumerate((qs, qs + 1.0, qs - 1.0)):
        eps = p * p
        a = 2 * k
        h[:, a, a] = eps + gn
        h[:, a + 1, a + 1] = eps + gn
        h[:, a, a + 1] = gn
        h[:, a + 1, a] = gn
    return h


def _check_half_zone(q) -> np.ndarray:
    qs = np.asarray(q, dtype=float)
    if np.any(qs <= 0.0) or np.any(qs > 0.5):
        raise ParameterError("q must lie in the half zone (0, 1/2]")
    return qs


def build_phonon_matrix(q: float, params: ModelParams) -> QuadraticForm:
    """Quadratic form of the phonon sector at quasi-momentum q.

    Assembles the homogeneous Bogoliubov pair blocks over the folded momenta
    {q, q+1, q-1} and rotates them into the (b_q, c_q, s_q) Bloch slots.  The
    photon does not appear: only the q=0 sector couples to it.  At q = 1/2
    the q-1 triplet member coincides with -q, so the outer pair is listed
    twice; the spectrum is unaffected (the folded bands remain exact there).
    """
    _check_half_zone(q)
    h_pw = _phonon_plane_wave_hamiltonian(q, params.gn)[0]
    t = phonon_bloch_rotation()
    return _form_from_hamiltonian(t @ h_pw @ t.conj().T)


def polariton_drive_coupling(params: ModelParams) -> float:
    """Photon-cosine coupling lambda of the quadratic drive term.

    lambda = (eta/2) sqrt(eps_k + 2 gn) with eps_k = 1, which normalizes the
    collective input eta so the soft mode reaches zero frequency exactly at
    critical_coupling for every gn: the zero-mode condition of the coupled
    photon-cosine block is 4 lambda^2 = (-delta_C)(eps_k + 2 gn).
    """
    return 0.5 * params.eta * math.sqrt(1.0 + 2.0 * params.gn)


def _polariton_plane_wave_hamiltonian(params: ModelParams) -> np.ndarray:
    gn = params.gn
    omega_a = -effective_detuning(params)
    lam = polariton_drive_coupling(params)
    h = np.zeros((8, 8), dtype=complex)
    h[0, 0] = h[1, 1] = omega_a
    h[2, 2] = h[3, 3] = gn
    h[2, 3] = h[3, 2] = gn
    for a in (4, 6):
        h[a, a] = h[a + 1, a + 1] = 1.0 + gn
    h[4, 7] = h[7, 4] = gn
    h[5, 6] = h[6, 5] = gn
    # pump scattering off the condensate: lambda (a + a^dag)(c0 + c0^dag)
    # written out over the plane-wave slots
    h[0:2, 4:8] = lam * _INV_SQRT2
    h[4:8, 0:2] = lam * _INV_SQRT2
    return h


def build_polariton_matrix(params: ModelParams) -> QuadraticForm:
    """Quadratic form of the q=0 sector (photon, b0, c0, s0).

    Photon energy -delta_C, atomic blocks equal to the q -> 0 limit of the
    phonon construction, and the drive coupling lambda between photon and
    cosine quadratures.  The sine mode is drive-decoupled; the b0 pair is the
    interaction-only Goldstone block.
    """
    h_pw = _polariton_plane_wave_hamiltonian(params)
    t = polariton_bloch_rotation()
    return _form_from_hamiltonian(t @ h_pw @ t.conj().T)


def _unstable_mode_set(f: np.ndarray) -> ModeSet:
    m = f.shape[0] // 2
    ev = np.linalg.eigvals(f)
    top = np.sort(ev.real)[m:]
    return ModeSet(
        frequencies=top,
        transform=None,
        stable=False,
        goldstone=np.zeros(m, dtype=bool),
    )


def symplectic_diagonalize(form: QuadraticForm) -> ModeSet:
    """Normal modes of a quadratic form, preserving bosonic commutators.

    Uses the positive-semidefinite square-root construction: with H = sigma F
    PSD, the Hermitian K = sqrt(H) sigma sqrt(H) has the +-omega spectrum, and
    v_j = pinv(sqrt(H)) W_j sqrt(kappa_j) built from its eigenpairs satisfies
    v^dag sigma v = 1 identically.  This stays well-conditioned at the
    Goldstone kernel where a Cholesky-based route breaks down.  Zero modes are
    reported at zero frequency with identity placeholder columns on their
    (exactly decoupled) slot pairs.  A Hamiltonian with a negative eigenvalue
    marks a dynamically unstable form (drive beyond the critical coupling):
    the result is flagged stable=False and carries real parts only.
    """
    f = form.matrix
    n = f.shape[0]
    m = n // 2
    sig = metric(m)
    h = sig[:, None] * f
    evals, basis = np.linalg.eigh(h)
    scale = max(1.0, float(np.max(np.abs(evals))))
    psd_tol = 1e-11 * scale
    if evals[0] < -psd_tol:
        return _unstable_mode_set(f)

    w = np.clip(evals, 0.0, None)
    sqw = np.sqrt(w)
    inv_sqw = np.zeros_like(sqw)
    inv_sqw[w > psd_tol] = 1.0 / sqw[w > psd_tol]
    sq = (basis * sqw) @ basis.conj().T
    pinv_sq = (basis * inv_sqw) @ basis.conj().T
    k = sq @ (sig[:, None] * sq)
    k = 0.5 * (k + k.conj().T)
    kappa, vecs = np.linalg.eigh(k)
    kscale = max(1.0, float(np.max(np.abs(kappa))))
    ztol = max(1e-9 * kscale, 1e-12)

    positive = np.where(kappa > ztol)[0]
    negative = np.where(kappa < -ztol)[0][::-1]  # ascending magnitude
    zero = np.where(np.abs(kappa) <= ztol)[0]
    if positive.size != negative.size or not np.allclose(
        kappa[positive], -kappa[negative], rtol=1e-9, atol=1e-9
    ):
        return _unstable_mode_set(f)

    # zero modes must sit on exactly decoupled slot pairs (each pair spans a
    # two-dimensional kernel of K); anything else is a genuine soft null
    # space, i.e. the drive sits at the critical coupling, and the normal
    # phase has no mode decomposition: flag instability
    gold_pairs: list[int] = []
    if zero.size:
        if zero.size % 2:
            return _unstable_mode_set(f)
        support = np.sum(np.abs(vecs[:, zero]) ** 2, axis=1)
        pair_support = support[0::2] + support[1::2]
        gold_pairs = [int(g) for g in np.where(pair_support > 0.5)[0]]
        confined = 2 * len(gold_pairs) == zero.size and np.allclose(
            pair_support[gold_pairs], 2.0, atol=1e-8
        )
        if not confined:
            return _unstable_mode_set(f)

    freqs = np.zeros(m)
    gold = np.zeros(m, dtype=bool)
    u = np.zeros((n, n), dtype=complex)
    col = 0
    for g in gold_pairs:
        gold[col // 2] = True
        u[2 * g, col] = 1.0
        u[2 * g + 1, col + 1] = 1.0
        col += 2
    # v = H^(-1/2) W sqrt(|kappa|) satisfies v^dag sigma v = sign(kappa)
    # exactly (sigma H^(-1/2) pairs with K^(-1)), so positive and negative
    # eigenvectors of K directly give the two columns of each mode pair
    for j_pos, j_neg in zip(positive, negative):
        v = pinv_sq @ vecs[:, j_pos] * math.sqrt(kappa[j_pos])
        vbar = pinv_sq @ vecs[:, j_neg] * math.sqrt(-kappa[j_neg])
        norm = float(np.real(v.conj() @ (sig * v)))
        norm_bar = -float(np.real(vbar.conj() @ (sig * vbar)))
        if norm <= 0.0 or norm_bar <= 0.0:
            return _unstable_mode_set(f)
        freqs[col // 2] = kappa[j_pos]
        u[:, col] = v / math.sqrt(norm)
        u[:, col + 1] = vbar / math.sqrt(norm_bar)
        col += 2
    return ModeSet(frequencies=freqs, transform=u, stable=True, goldstone=gold)


def diagonalize_phonon_grid(q, params: ModelParams):
    """Bands and Bogoliubov transforms for a batch of half-zone momenta.

    Returns (frequencies (N, 3) ascending per row, transforms (N, 6, 6)).
    Same construction as symplectic_diagonalize, restricted to the strictly
    positive-definite phonon case so the whole grid runs as one batched
    eigendecomposition.
    """
    qs = _check_half_zone(np.atleast_1d(q))
    h_pw = _phonon_plane_wave_hamiltonian(qs, params.gn)
    t = phonon_bloch_rotation()
    h = t[None] @ h_pw @ t.conj().T[None]
    sig = metric(3)

    w, basis = np.linalg.eigh(h)
    if w[:, 0].min() <= 0.0:
        raise DiagonalizationError("phonon Hamiltonian must be positive definite")
    basis_h = np.conj(np.swapaxes(basis, 1, 2))
    sqw = np.sqrt(w)
    sq = (basis * sqw[:, None, :]) @ basis_h
    pinv_sq = (basis * (1.0 / sqw)[:, None, :]) @ basis_h
    k = sq @ (sig[None, :, None] * sq)
    k = 0.5 * (k + np.conj(np.swapaxes(k, 1, 2)))
    kappa, vecs = np.linalg.eigh(k)
    if kappa[:, 3:].min() <= 0.0:
        raise DiagonalizationError("phonon spectrum lost its positive triplet")

    freqs = kappa[:, 3:]
    # negative eigenvalues ascend from most negative, so reversing their
    # block pairs each +omega_m with its -omega_m partner
    v = pinv_sq @ vecs[:, :, 3:] * np.sqrt(freqs)[:, None, :]
    vbar = pinv_sq @ vecs[:, :, 2::-1] * np.sqrt(-kappa[:, 2::-1])[:, None, :]
    norms = np.einsum("qij,i,qij->qj", v.conj(), sig, v).real
    norms_bar = -np.einsum("qij,i,qij->qj", vbar.conj(), sig, vbar).real
    if norms.min() <= 0.0 or norms_bar.min() <= 0.0:
        raise DiagonalizationError("phonon mode normalization lost its sign")
    u = np.zeros((qs.size, 6, 6), dtype=complex)
    u[:, :, 0::2] = v / np.sqrt(norms)[:, None, :]
    u[:, :, 1::2] = vbar / np.sqrt(norms_bar)[:, None, :]
    return freqs, u


_POLARITON_WEIGHT_SLOTS = (0, 1, 4, 5)  # photon and cosine rows


def identify_soft_mode(modes: ModeSet, cluster_tol: float = 1e-7):
    """Index of the soft polariton mode, resolving degenerate clusters.

    The soft mode is the lowest positive-frequency non-Goldstone mode.  At
    eta = 0 the cosine and sine modes are exactly degenerate and the
    eigensolver may mix them; the degenerate cluster is then rotated so the
    first member maximizes its photon-plus-cosine slot weight, which singles
    out the drive-coupled combination.  Returns (index, mode_set) where
    mode_set carries any such rotation.
    """
    if not modes.stable or modes.transform is None:
        raise SoftModeError("mode set is unstable")
    candidates = np.where(~modes.goldstone)[0]
    if candidates.size == 0:
        raise SoftModeError("no positive-frequency modes present")
    soft = int(candidates[0])
    freqs = modes.frequencies
    top = max(1.0, float(freqs.max()))
    if freqs[soft] <= 1e-8 * top:
        raise SoftModeError(
            "lowest positive mode is indistinguishable from the Goldstone sector"
        )
    cluster = [
        int(j)
        for j in candidates
        if abs(freqs[j] - freqs[soft]) <= cluster_tol * max(freqs[soft], 1.0)
    ]
    if len(cluster) == 1:
        return soft, modes

    u = modes.transform.copy()
    cols = np.stack([u[:, 2 * j] for j in cluster], axis=1)
    rows = list(_POLARITON_WEIGHT_SLOTS)
    overlap = cols[rows, :].conj().T @ cols[rows, :]
    _, rot = np.linalg.eigh(overlap)
    rot = rot[:, ::-1]  # descending photon-plus-cosine weight
    rotated = cols @ rot
    # the creation-side columns within a degenerate cluster mix with the
    # conjugate coefficients, which keeps U sigma-unitary
    cols_bar = np.stack([u[:, 2 * j + 1] for j in cluster], axis=1)
    rotated_bar = cols_bar @ rot.conj()
    for pos, j in enumerate(cluster):
        u[:, 2 * j] = rotated[:, pos]
        u[:, 2 * j + 1] = rotated_bar[:, pos]
    new_modes = ModeSet(
        frequencies=modes.frequencies,
        transform=u,
        stable=True,
        goldstone=modes.goldstone,
    )
    return soft, new_modes


def locate_threshold(params: ModelParams, rel_tol: float = 1e-10) -> float:
    """Numerically locate the drive strength where stability is lost.

    Bisection on the stability flag of the polariton form, bracketed by
    [0, 2 eta_c].  Agrees with critical_coupling up to solver tolerance.
    """
    from dataclasses import replace

    eta_c = critical_coupling(params)

    def stable_at(eta: float) -> bool:
        form = build_polariton_matrix(replace(params, eta=eta))
        return symplectic_diagonalize(form).stable

    lo, hi = 0.0, 2.0 * eta_c
    if not stable_at(lo):
        raise DiagonalizationError("unstable already at eta = 0")
    if stable_at(hi):
        raise DiagonalizationError("no instability found below 2 eta_c")
    while hi - lo > rel_tol * eta_c:
        mid = 0.5 * (lo + hi)
        if stable_at(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
