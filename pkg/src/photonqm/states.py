"""Helicity-resolved photon states ``a_lambda(k)`` and their scalar amplitudes.

A state stores one complex scalar per (helicity, k node). The Cartesian
vector amplitude is ``a(k) = sum_lambda a_lambda(k) e_lambda(k)`` and is
transverse by construction.

Projections onto the position basis:

* ``phi_lambda(t, x) = sum_k dVk/(2 pi)^3  a_lambda(k)/omega_k  exp(-i(omega_k (t - t_ref) - k.x))``
* ``psi_lambda = i d/dt phi_lambda``, evaluated spectrally as multiplication by omega_k.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .grid import (
    HELICITIES,
    KGrid,
    XGrid,
    inverse_transform,
    polarization_frame,
)


@dataclass(frozen=True)
class PhotonStateK:
    grid: KGrid
    amp: np.ndarray
    t_ref: float = 0.0

    def __post_init__(self):
        amp = np.array(self.amp, dtype=complex)
        if amp.shape != (2,) + self.grid.shape:
            raise ValueError(f"amp must have shape (2, n, n, n), got {amp.shape}")
        if not np.all(np.isfinite(amp)):
            raise ValueError("state amplitudes must be finite")
        amp.setflags(write=False)
        object.__setattr__(self, "amp", amp)

    def component(self, lam: int) -> np.ndarray:
        return self.amp[HELICITIES.index(lam)]

    def vector(self) -> np.ndarray:
        """Cartesian amplitude ``a(k)``, shape ``(3, n, n, n)``."""
        e = polarization_frame(self.grid).e_helicity
        return np.einsum("h...,hi...->i...", self.amp, e)

    def with_amp(self, amp: np.ndarray) -> "PhotonStateK":
        return PhotonStateK(self.grid, amp, self.t_ref)

    def __add__(self, other: "PhotonStateK") -> "PhotonStateK":
        _same_frame(self, other)
        return self.with_amp(self.amp + other.amp)

    def __sub__(self, other: "PhotonStateK") -> "PhotonStateK":
        _same_frame(self, other)
        return self.with_amp(self.amp - other.amp)

    def __mul__(self, scalar: complex) -> "PhotonStateK":
        return self.with_amp(self.amp * scalar)

    __rmul__ = __mul__


def _same_frame(s1: PhotonStateK, s2: PhotonStateK) -> None:
    if s1.grid != s2.grid:
        raise ValueError("states live on different k grids")
    if s1.t_ref != s2.t_ref:
        raise ValueError("states are referenced to different hyperplane times")


def zero_state(kgrid: KGrid, t_ref: float = 0.0) -> PhotonStateK:
    return PhotonStateK(kgrid, np.zeros((2,) + kgrid.shape, dtype=complex), t_ref)


def from_helicity(kgrid: KGrid, lam: int, profile: np.ndarray, t_ref: float = 0.0) -> PhotonStateK:
    """State with ``profile`` in helicity ``lam`` and nothing in the other."""
    amp = np.zeros((2,) + kgrid.shape, dtype=complex)
    amp[HELICITIES.index(lam)] = profile
    return PhotonStateK(kgrid, amp, t_ref)


def helicity_amplitudes(vec: np.ndarray, kgrid: KGrid) -> np.ndarray:
    """Project a Cartesian amplitude onto ``e_lambda``; returns shape ``(2, ...)``."""
    e = polarization_frame(kgrid).e_helicity
    return np.einsum("hi...,i...->h...", np.conj(e), vec)


def plane_wave_state(kgrid: KGrid, k_node, lam: int, t_ref: float = 0.0) -> PhotonStateK:
    """Discrete covariant plane wave: ``(2 pi)^3 omega_k' / dVk`` at node ``k'``.

    ``k_node`` may be an index triple (ints) or a wave vector lying on the grid.
    """
    index = _as_index(kgrid, k_node)
    profile = np.zeros(kgrid.shape, dtype=complex)
    profile[index] = (2.0 * np.pi) ** 3 * kgrid.norm[index] / kgrid.cell_volume
    return from_helicity(kgrid, lam, profile, t_ref)


def _as_index(kgrid: KGrid, k_node) -> tuple[int, int, int]:
    arr = np.asarray(k_node)
    if arr.dtype.kind in "iu":
        index = tuple(int(i) for i in arr)
        if len(index) != 3 or not all(0 <= i < kgrid.n for i in index):
            raise ValueError(f"node index {index} is outside the grid")
        return index
    return kgrid.node_index(arr)


def position_eigenstate(
    kgrid: KGrid,
    x_prime,
    lam: int,
    alpha: float = 0.0,
    t_ref: float = 0.0,
    epsilon: float | None = None,
) -> PhotonStateK:
    """Localized state ``omega_k^alpha exp(-i k.x')`` in helicity ``lam``.

    ``alpha = 0`` is the covariant choice, ``alpha = 1/2`` the Newton-Wigner
    one. The phase ``exp(i omega t')`` is carried by ``t_ref = t'``. With
    ``epsilon`` the profile is damped by ``exp(-epsilon |k|)``, which makes the
    state normalizable and gives closed-form position-space profiles.
    """
    if alpha not in (0.0, 0.5):
        warnings.warn(f"alpha={alpha}: no reference eigenvector profile for this exponent", stacklevel=2)
    x_prime = np.asarray(x_prime, dtype=float)
    k = kgrid.coords
    phase = np.exp(-1j * (k[0] * x_prime[0] + k[1] * x_prime[1] + k[2] * x_prime[2]))
    profile = kgrid.norm**alpha * phase
    if epsilon is not None:
        if epsilon <= 0:
            raise ValueError("epsilon must be positive")
        profile = profile * np.exp(-epsilon * kgrid.norm)
    return from_helicity(kgrid, lam, profile, t_ref)


def gaussian_state(
    kgrid: KGrid, k0, width: float, lam: int = 1, t_ref: float = 0.0, x0=(0.0, 0.0, 0.0)
) -> PhotonStateK:
    """``exp(-|k - k0|^2 / 2 width^2 - i k.x0)`` in helicity ``lam``."""
    k = kgrid.coords
    k0 = np.asarray(k0, dtype=float)
    x0 = np.asarray(x0, dtype=float)
    d2 = sum((k[i] - k0[i]) ** 2 for i in range(3))
    phase = np.exp(-1j * sum(k[i] * x0[i] for i in range(3)))
    return from_helicity(kgrid, lam, np.exp(-d2 / (2.0 * width**2)) * phase, t_ref)


@dataclass(frozen=True)
class ScalarAmplitudeField:
    """``phi`` or ``psi`` sampled on the x grid, one slab per helicity.

    ``parts`` holds the real (c, s) pair with ``c + i s = sqrt(2) * values``.
    """

    grid: XGrid
    values: np.ndarray
    t: float
    kind: str
    parts: tuple[np.ndarray, np.ndarray] | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.kind not in ("phi", "psi"):
            raise ValueError(f"kind must be 'phi' or 'psi', got {self.kind!r}")

    def component(self, lam: int) -> np.ndarray:
        return self.values[HELICITIES.index(lam)]

    def with_parts(self) -> "ScalarAmplitudeField":
        return ScalarAmplitudeField(self.grid, self.values, self.t, self.kind, even_odd_parts(self.values))

    def density(self) -> np.ndarray:
        """``rho_lambda = psi_c^2 + psi_s^2`` per helicity."""
        c, s = self.parts if self.parts is not None else even_odd_parts(self.values)
        return c**2 + s**2


def _phase(state: PhotonStateK, t: float) -> np.ndarray:
    return np.exp(-1j * state.grid.omega * (t - state.t_ref))


def project_phi(state: PhotonStateK, xgrid: XGrid, t: float | None = None) -> ScalarAmplitudeField:
    t = state.t_ref if t is None else t
    spectrum = state.amp / state.grid.omega * _phase(state, t)
    return ScalarAmplitudeField(xgrid, inverse_transform(spectrum, state.grid, xgrid), t, "phi")


def project_psi(state: PhotonStateK, xgrid: XGrid, t: float | None = None) -> ScalarAmplitudeField:
    t = state.t_ref if t is None else t
    spectrum = state.amp * _phase(state, t)
    return ScalarAmplitudeField(xgrid, inverse_transform(spectrum, state.grid, xgrid), t, "psi")


def even_odd_parts(F):
    """Real charge-conjugation parts ``c = (F + F*)/sqrt 2``, ``s = (F - F*)/(sqrt 2 i)``.

    Accepts an array or a :class:`PhotonStateK` (acting on its amplitudes).
    """
    if isinstance(F, PhotonStateK):
        F = F.amp
    F = np.asarray(F)
    root2 = np.sqrt(2.0)
    c = ((F + np.conj(F)) / root2).real
    s = ((F - np.conj(F)) / (root2 * 1j)).real
    return c, s
