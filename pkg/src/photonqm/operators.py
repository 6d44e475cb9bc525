"""Momentum, Hamiltonian, position and angular-momentum operators in k-space.

Vector states are Cartesian amplitudes of shape ``(3, n, n, n)``. The
position operator

    x = i d/dk - i alpha k/|k|^2 + (1/|k|^2) k x S - lambda (cos theta / (k sin theta)) e_phi

is applied term by term. ``i d/dk`` is a second-order central difference;
nodes within one stencil of the k-grid boundary come back as NaN, so
composite applications widen the invalid layer automatically. ``lambda`` acts
on the helicity components of the vector (longitudinal parts get zero).
"""

from __future__ import annotations

import warnings

import numpy as np

from .grid import AXIS_SIN_THRESHOLD, HELICITIES, KGrid, grid_sum, polarization_frame
from .states import PhotonStateK

LEVI_CIVITA = np.zeros((3, 3, 3))
for _i, _j, _k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
    LEVI_CIVITA[_i, _j, _k] = 1.0
    LEVI_CIVITA[_i, _k, _j] = -1.0

# (S_j)_{il} = -i eps_{jil}
SPIN_MATRICES = -1j * LEVI_CIVITA


def apply_momentum(state: PhotonStateK) -> list[PhotonStateK]:
    """``p = hbar k``; one state per Cartesian component."""
    return [state.with_amp(state.amp * state.grid.coords[i]) for i in range(3)]


def apply_hamiltonian(state: PhotonStateK) -> PhotonStateK:
    return state.with_amp(state.amp * state.grid.omega)


def materialize(state: PhotonStateK) -> np.ndarray:
    return state.vector()


def central_difference(f: np.ndarray, axis: int, dk: float) -> np.ndarray:
    """``d/dk_axis`` over the trailing grid axes; boundary layer set to NaN."""
    out = np.full(f.shape, np.nan, dtype=np.result_type(f.dtype, float))
    a = f.ndim - 3 + axis
    center = [slice(None)] * f.ndim
    plus = [slice(None)] * f.ndim
    minus = [slice(None)] * f.ndim
    center[a] = slice(1, -1)
    plus[a] = slice(2, None)
    minus[a] = slice(None, -2)
    out[tuple(center)] = (f[tuple(plus)] - f[tuple(minus)]) / (2.0 * dk)
    return out


def helicity_operator(vec: np.ndarray, kgrid: KGrid) -> np.ndarray:
    """``lambda-hat``: multiply each helicity component of ``vec`` by lambda."""
    e = polarization_frame(kgrid).e_helicity
    out = np.zeros_like(vec, dtype=complex)
    for h, lam in enumerate(HELICITIES):
        comp = np.einsum("i...,i...->...", np.conj(e[h]), vec)
        out += lam * comp * e[h]
    return out


def _position_component(vec: np.ndarray, kgrid: KGrid, i: int, alpha: float, lam_vec: np.ndarray) -> np.ndarray:
    frame = polarization_frame(kgrid)
    k = kgrid.coords
    k2 = kgrid.norm**2
    out = 1j * central_difference(vec, i, kgrid.dk)
    if alpha:
        out = out - 1j * alpha * (k[i] / k2) * vec
    # ((k x S)_i a)_l = eps_ipq k_p (S_q)_lm a_m
    kS = np.einsum("pq,p...,qlm,m...->l...", LEVI_CIVITA[i], k, SPIN_MATRICES, vec)
    out = out + kS / k2
    out = out - (frame.cot_theta / kgrid.norm * frame.e_phi[i]) * lam_vec
    return out


def apply_position(vec: np.ndarray, kgrid: KGrid, alpha: float = 0.0) -> np.ndarray:
    """All three components of the position operator, shape ``(3, 3, n, n, n)``.

    The first axis is the operator component, the second the vector index.
    """
    if alpha not in (0.0, 0.5):
        warnings.warn(f"alpha={alpha}: no reference eigenvector profile for this exponent", stacklevel=2)
    lam_vec = helicity_operator(vec, kgrid)
    return np.array([_position_component(vec, kgrid, i, alpha, lam_vec) for i in range(3)])


def position_component(vec: np.ndarray, kgrid: KGrid, i: int, alpha: float = 0.0) -> np.ndarray:
    return _position_component(vec, kgrid, i, alpha, helicity_operator(vec, kgrid))


def internal_j_direction(k: np.ndarray) -> np.ndarray:
    """``cot(theta) e_theta + e_k`` at arbitrary wave vectors ``k`` (shape ``(3, ...)``)."""
    from .grid import frame_at

    fr = frame_at(k)
    return fr.cot_theta * fr.e_theta + fr.e_k


def apply_internal_J(vec: np.ndarray, kgrid: KGrid) -> np.ndarray:
    """``J_int = hbar lambda (cot theta e_theta + e_k)``, shape ``(3, 3, n, n, n)``."""
    direction = internal_j_direction(kgrid.coords)
    lam_vec = helicity_operator(vec, kgrid)
    return np.array([direction[i] * lam_vec for i in range(3)])


def apply_orbital_J(vec: np.ndarray, kgrid: KGrid, alpha: float = 0.0) -> np.ndarray:
    """``(x x P)_i = eps_ijm x_j (P_m vec)``: momentum acts first."""
    k = kgrid.coords
    out = np.zeros((3,) + vec.shape, dtype=complex)
    for j in range(3):
        for m in range(3):
            if j == m:
                continue
            pm = k[m] * vec
            xj = position_component(pm, kgrid, j, alpha)
            for i in range(3):
                if LEVI_CIVITA[i, j, m]:
                    out[i] += LEVI_CIVITA[i, j, m] * xj
    return out


def apply_total_J(vec: np.ndarray, kgrid: KGrid, alpha: float = 0.0) -> np.ndarray:
    return apply_orbital_J(vec, kgrid, alpha) + apply_internal_J(vec, kgrid)


def smooth_step(u: np.ndarray) -> np.ndarray:
    """C-infinity step: 0 for ``u <= 0``, 1 for ``u >= 1``."""
    u = np.asarray(u, dtype=float)
    inside = (u > 0) & (u < 1)
    uu = np.where(inside, u, 0.5)
    a = np.exp(-1.0 / uu)
    b = np.exp(-1.0 / (1.0 - uu))
    return np.where(inside, a / (a + b), (u >= 1).astype(float))


def analysis_window(
    kgrid: KGrid,
    k_inner: float = 0.15,
    rho_inner: float = 0.1,
    k_outer: float = 0.8,
    ramp: float = 0.15,
) -> np.ndarray:
    """Smooth weight that removes the frame singularities and the boundary layer.

    Distances are fractions of ``k_max`` so the excluded region is fixed in
    physical units as the grid is refined: the weight vanishes for
    ``|k| < k_inner``, distance to the polar axis ``< rho_inner`` and
    ``|k_i| > k_outer``. Residual norms over this weight converge at the
    order of the underlying stencil.
    """
    k = kgrid.coords
    K = kgrid.k_max
    rho = np.hypot(k[0], k[1])
    w = smooth_step((kgrid.norm - k_inner * K) / (ramp * K))
    w = w * smooth_step((rho - rho_inner * K) / (ramp * K))
    for i in range(3):
        w = w * smooth_step((k_outer * K - np.abs(k[i])) / (ramp * K))
    return w


def axis_adjacent(kgrid: KGrid) -> np.ndarray:
    return kgrid.sin_theta < AXIS_SIN_THRESHOLD


def weighted_norm(vec: np.ndarray, weight: np.ndarray) -> float:
    """``sqrt(sum_nodes weight |vec|^2)`` over the trailing grid axes; NaN where weight is 0 is ignored."""
    mag2 = np.sum(np.abs(vec) ** 2, axis=tuple(range(vec.ndim - 3)))
    mag2 = np.where(weight > 0, mag2, 0.0)
    if np.isnan(mag2).any():
        raise ValueError("residual is undefined inside the analysis window")
    return float(np.sqrt(grid_sum(weight * mag2)))


def eigen_residual(kgrid: KGrid, x_prime, lam: int, alpha: float = 0.0, window=None) -> float:
    """``||x_i Psi - x'_i Psi|| / ||Psi||`` summed over components for the eigenvector at ``x'``."""
    from .states import position_eigenstate

    window = analysis_window(kgrid) if window is None else window
    psi = position_eigenstate(kgrid, x_prime, lam, alpha).vector()
    xp = np.asarray(x_prime, dtype=float)
    X = apply_position(psi, kgrid, alpha)
    res = X - xp[:, None, None, None, None] * psi[None]
    return weighted_norm(res, window) / weighted_norm(psi, window)


def commutator_residual(vec: np.ndarray, kgrid: KGrid, i: int, j: int, alpha: float = 0.0, window=None) -> float:
    """``||[x_i, x_j] vec|| / ||vec||``."""
    window = analysis_window(kgrid) if window is None else window
    ij = position_component(position_component(vec, kgrid, j, alpha), kgrid, i, alpha)
    ji = position_component(position_component(vec, kgrid, i, alpha), kgrid, j, alpha)
    return weighted_norm(ij - ji, window) / weighted_norm(vec, window)


def convergence_order(delta_k, residuals) -> float:
    """Least-squares slope of ``log residual`` against ``log delta_k``."""
    return float(np.polyfit(np.log(delta_k), np.log(residuals), 1)[0])
