"""Potential and field synthesis, Maxwell/wave residuals and the Noether current.

Coulomb gauge, source-free synthesis: the scalar potential is identically
zero and only transverse helicity modes are present. Spectral conventions:
``A~ = a e / omega``, ``E~ = i a e``, ``B~ = i k x A~`` (each times
``exp(-i omega (t - t_ref))``), and ``d/dt -> -i omega`` for positive
frequency content.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import (
    HELICITIES,
    KGrid,
    XGrid,
    forward_transform,
    grid_sum,
    inverse_transform,
    periodic_gradient,
    polarization_frame,
)
from .states import PhotonStateK, even_odd_parts


@dataclass(frozen=True)
class FieldSnapshot:
    t: float
    A: np.ndarray
    E: np.ndarray
    B: np.ndarray
    kgrid: KGrid
    xgrid: XGrid
    gauge: str = "coulomb"

    @property
    def D(self) -> np.ndarray:
        return self.E

    @property
    def H(self) -> np.ndarray:
        return self.B

    def parts(self) -> dict[str, tuple[np.ndarray, np.ndarray]]:
        return {name: even_odd_parts(getattr(self, name)) for name in ("A", "E", "B")}


@dataclass(frozen=True)
class ExternalCurrent:
    """Prescribed matter source ``(rho_m, J_m)``; never evolved."""

    rho: np.ndarray
    J: np.ndarray

    @classmethod
    def zero(cls, xgrid: XGrid) -> "ExternalCurrent":
        return cls(np.zeros(xgrid.shape, dtype=complex), np.zeros((3,) + xgrid.shape, dtype=complex))


def _cross(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.array(
        [
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ]
    )


def _spectra(state: PhotonStateK, t: float, dispersion=None):
    g = state.grid
    omega_t = g.omega if dispersion is None else dispersion(g.norm)
    phase = np.exp(-1j * omega_t * (t - state.t_ref))
    vec = state.vector() * phase
    return vec / g.omega, 1j * vec * (omega_t / g.omega)


def synthesize(state: PhotonStateK, xgrid: XGrid, t: float | None = None) -> FieldSnapshot:
    t = state.t_ref if t is None else t
    kg = state.grid
    A_k, E_k = _spectra(state, t)
    B_k = _cross(1j * kg.coords, A_k)
    return FieldSnapshot(
        t,
        inverse_transform(A_k, kg, xgrid),
        inverse_transform(E_k, kg, xgrid),
        inverse_transform(B_k, kg, xgrid),
        kg,
        xgrid,
    )


def synthesize_helicity(state: PhotonStateK, xgrid: XGrid, t: float, lam: int):
    """``(A_lambda, E_lambda)`` for a single helicity sector."""
    kg = state.grid
    e = polarization_frame(kg).e(lam)
    a = state.component(lam) * np.exp(-1j * kg.omega * (t - state.t_ref))
    A = inverse_transform(e * (a / kg.omega), kg, xgrid)
    E = inverse_transform(1j * e * a, kg, xgrid)
    return A, E


def _spectral_div(F: np.ndarray, kg: KGrid, xg: XGrid) -> np.ndarray:
    Fk = forward_transform(F, kg, xg)
    k = kg.coords
    return inverse_transform(1j * (k[0] * Fk[0] + k[1] * Fk[1] + k[2] * Fk[2]), kg, xg)


def _spectral_curl(F: np.ndarray, kg: KGrid, xg: XGrid) -> np.ndarray:
    Fk = forward_transform(F, kg, xg)
    return inverse_transform(_cross(1j * kg.coords, Fk), kg, xg)


def time_derivative(F: np.ndarray, kg: KGrid, xg: XGrid) -> np.ndarray:
    """Spectral ``d/dt`` of a positive-frequency field sampled on the x grid."""
    return inverse_transform(-1j * kg.omega * forward_transform(F, kg, xg), kg, xg)


def maxwell_residual(snap: FieldSnapshot, source: ExternalCurrent | None = None):
    """``(div D - rho_m, curl H - dD/dt - J_m)``."""
    kg, xg = snap.kgrid, snap.xgrid
    if source is None:
        source = ExternalCurrent.zero(xg)
    div = _spectral_div(snap.D, kg, xg) - source.rho
    curl = _spectral_curl(snap.H, kg, xg) - time_derivative(snap.D, kg, xg) - source.J
    return div, curl


def gauge_function(snap: FieldSnapshot) -> np.ndarray:
    """``Lambda = dphi/dt + div A``; the scalar potential is zero here."""
    return _spectral_div(snap.A, snap.kgrid, snap.xgrid)


def wave_residual(state: PhotonStateK, xgrid: XGrid, t: float | None = None, dispersion=None) -> np.ndarray:
    """d'Alembertian of the four-potential, shape ``(4, n, n, n)``.

    ``dispersion`` maps ``|k|`` to the angular frequency the synthesized field
    actually oscillates with; the default is the light cone ``omega = |k|``.
    A detuned dispersion gives a residual ``(k^2 - omega^2) A~`` per mode.
    """
    t = state.t_ref if t is None else t
    kg = state.grid
    g = kg
    omega_t = g.omega if dispersion is None else dispersion(g.norm)
    A_k, _ = _spectra(state, t, dispersion)
    box = (g.norm**2 - omega_t**2) * A_k
    out = np.zeros((4,) + xgrid.shape, dtype=complex)
    out[1:] = inverse_transform(box, kg, xgrid)
    return out


def lagrangian_density(snap: FieldSnapshot) -> np.ndarray:
    """``-(E.E* - B.B*)`` (sign as in the real Lagrangian used here)."""
    e2 = np.sum(np.abs(snap.E) ** 2, axis=0)
    b2 = np.sum(np.abs(snap.B) ** 2, axis=0)
    return -(e2 - b2)


def faraday_tensor(snap: FieldSnapshot) -> np.ndarray:
    """``F^{mu nu} = d^mu A^nu - d^nu A^mu`` with ``d^mu = (d_t, -grad)``.

    Entries: ``F^{i0} = E_i``, ``F^{0i} = -E_i``, ``F^{ij} = -eps_ijk B_k``.
    """
    E, B = snap.E, snap.B
    F = np.zeros((4, 4) + E.shape[1:], dtype=complex)
    for i in range(3):
        F[i + 1, 0] = E[i]
        F[0, i + 1] = -E[i]
    F[1, 2], F[2, 1] = -B[2], B[2]
    F[2, 3], F[3, 2] = -B[0], B[0]
    F[3, 1], F[1, 3] = -B[1], B[1]
    return F


def fields_from_tensor(F: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    E = np.array([F[1, 0], F[2, 0], F[3, 0]])
    B = np.array([F[3, 2], F[1, 3], F[2, 1]])
    return E, B


_METRIC = np.array([1.0, -1.0, -1.0, -1.0])


def _lower_potential(A: np.ndarray) -> np.ndarray:
    """Covariant ``A_mu = (phi, -A)`` with ``phi = 0``."""
    out = np.zeros((4,) + A.shape[1:], dtype=A.dtype)
    out[1:] = A
    return out * _METRIC.reshape((4,) + (1,) * (A.ndim - 1))


def noether_current(state: PhotonStateK, xgrid: XGrid, t: float | None = None):
    """Number four-current ``(J0, J)``, assembled from the real (c, s) parts.

    ``J^mu = 1/2 (F_s^{mu nu} A_{c nu} - F_c^{mu nu} A_{s nu})`` with the c/s
    split applied to both the potential and the field tensor.
    Equivalent to ``Im(F^{mu nu} A*_nu)``; ``J0 = Im(E.A*)``, ``J = Im(A* x B)``.
    """
    snap = synthesize(state, xgrid, t)
    F = faraday_tensor(snap)
    Fc, Fs = even_odd_parts(F)
    Ac, As = even_odd_parts(_lower_potential(snap.A))
    J = 0.5 * (np.einsum("mn...,n...->m...", Fs, Ac) - np.einsum("mn...,n...->m...", Fc, As))
    return J[0], J[1:]


def number(state: PhotonStateK, xgrid: XGrid, t: float | None = None) -> float:
    J0, _ = noether_current(state, xgrid, t)
    return float(grid_sum(J0)) * xgrid.cell_volume


def _rms(a: np.ndarray) -> float:
    return float(np.sqrt(np.mean(np.abs(a) ** 2)))


def continuity_residual(state: PhotonStateK, xgrid: XGrid, t: float | None = None, delta: float = 1e-4) -> dict:
    """RMS of ``dJ0/dt + div J``.

    ``dJ0/dt`` is a centered difference of currents at ``t +- delta``; ``div J``
    is the spectral divergence of the (strictly periodic) current. The state
    must be band-limited to half the grid band for the product to be alias-free.
    """
    t = state.t_ref if t is None else t
    J0p, _ = noether_current(state, xgrid, t + delta)
    J0m, _ = noether_current(state, xgrid, t - delta)
    J0, J = noether_current(state, xgrid, t)
    dJ0 = (J0p - J0m) / (2.0 * delta)
    divJ = sum(periodic_gradient(J[i], xgrid)[i] for i in range(3)).real
    res = dJ0 + divJ
    rms = _rms(res)
    scale = max(_rms(dJ0), _rms(divJ))
    occupied = np.abs(state.amp).max(axis=0) > 1e-12 * max(np.abs(state.amp).max(), 1e-300)
    omega_scale = float(state.grid.omega[occupied].max()) if occupied.any() else 0.0
    floor = omega_scale * _rms(J0)
    if scale < 1e-8 * floor:
        # stationary density: measure against the natural rate scale instead
        scale = floor
    rel = rms / scale if scale > 0 else 0.0
    return {"rms": rms, "relative": rel, "scale": scale}


def residual_summary(field: np.ndarray, scale: float = 1.0) -> dict:
    """RMS, max and location of max of ``|field|`` (vector fields summed in quadrature)."""
    mag = np.abs(field)
    if mag.ndim == 4:
        mag = np.sqrt(np.sum(mag**2, axis=0))
    loc = np.unravel_index(int(np.argmax(mag)), mag.shape)
    rms = float(np.sqrt(np.mean(mag**2)))
    return {
        "rms": rms,
        "relative_rms": rms / scale if scale else rms,
        "max": float(mag[loc]),
        "location": [int(i) for i in loc],
    }
