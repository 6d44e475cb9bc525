"""Conjugate k-space / x-space lattices, four-vectors and helicity frames.

Conventions (natural units, hbar = eps0 = c = 1):

* k nodes along each axis: ``k_j = -k_max + (j + offset) * dk``, ``dk = 2 k_max / n``.
* x nodes along each axis: ``x_m = (m - n/2) * dx``, ``dx = pi / k_max``, so the
  origin is a node and ``dx * dk = 2 pi / n``.
* forward transform   ``f~(k) = sum_x f(x) exp(-i k.x) dVx``
* inverse transform   ``f(x)  = sum_k f~(k) exp(+i k.x) dVk / (2 pi)^3``

With ``dVx * dVk * n^3 = (2 pi)^3`` the pair is an exact inverse, and a grid
delta of weight ``1/dVx`` at ``x0`` maps to ``exp(-i k.x0)`` at every k node.
Because the k nodes are offset from the origin, x-space fields are
quasi-periodic: ``f(x + L) = exp(i offset dk L) f(x)`` along each axis.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np
import scipy.fft

HELICITIES = (1, -1)

# sin(theta) below this marks a node as axis-adjacent for operator diagnostics
AXIS_SIN_THRESHOLD = 1e-3


def _workers() -> int:
    raw = os.environ.get("PHOTONQM_THREADS")
    if not raw:
        return 1
    return max(1, int(raw))


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def grid_sum(values: np.ndarray, axes: int = 3) -> np.ndarray | complex | float:
    """Sum over the trailing ``axes`` grid axes in a fixed order.

    The trailing block is copied to a contiguous buffer and reduced with
    numpy's pairwise summation, which gives the same bits regardless of
    thread count.
    """
    values = np.asarray(values)
    lead = values.shape[: values.ndim - axes]
    flat = np.ascontiguousarray(values).reshape(lead + (-1,))
    return flat.sum(axis=-1)


@dataclass(frozen=True)
class FourVector:
    """Contravariant four-vector ``(U0, U)`` with metric ``diag(1, -1, -1, -1)``."""

    t_component: float
    spatial: tuple[float, float, float]

    def __post_init__(self):
        object.__setattr__(self, "spatial", tuple(float(s) for s in self.spatial))
        if len(self.spatial) != 3:
            raise ValueError("spatial part must have three entries")

    def lower(self) -> "FourVector":
        return FourVector(self.t_component, tuple(-s for s in self.spatial))

    def dot(self, other: "FourVector") -> float:
        return self.t_component * other.t_component - float(
            np.dot(self.spatial, other.spatial)
        )

    @classmethod
    def event(cls, t: float, x) -> "FourVector":
        """Space-time point ``(ct, x)`` with c = 1."""
        return cls(float(t), tuple(x))

    @classmethod
    def wave_vector(cls, k) -> "FourVector":
        """Light-like wave four-vector ``(omega_k, k)`` with ``omega_k = |k|``."""
        k = np.asarray(k, dtype=float)
        return cls(float(np.linalg.norm(k)), tuple(k))


@dataclass(frozen=True)
class KGrid:
    n: int
    k_max: float
    offset: float = 0.5

    @property
    def dk(self) -> float:
        return 2.0 * self.k_max / self.n

    @property
    def cell_volume(self) -> float:
        return self.dk**3

    @property
    def shape(self) -> tuple[int, int, int]:
        return (self.n, self.n, self.n)

    @cached_property
    def axis(self) -> np.ndarray:
        return _readonly(-self.k_max + (np.arange(self.n) + self.offset) * self.dk)

    @cached_property
    def coords(self) -> np.ndarray:
        """Node coordinates, shape ``(3, n, n, n)``."""
        return _readonly(np.array(np.meshgrid(self.axis, self.axis, self.axis, indexing="ij")))

    @cached_property
    def norm(self) -> np.ndarray:
        """``|k|`` (equal to omega_k with c = 1)."""
        k = self.coords
        return _readonly(np.sqrt(k[0] ** 2 + k[1] ** 2 + k[2] ** 2))

    @property
    def omega(self) -> np.ndarray:
        return self.norm

    @cached_property
    def sin_theta(self) -> np.ndarray:
        k = self.coords
        return _readonly(np.hypot(k[0], k[1]) / self.norm)

    @property
    def measure(self) -> float:
        """Weight ``dVk / (2 pi)^3`` of a k-space sum."""
        return self.cell_volume / (2.0 * np.pi) ** 3

    def node_index(self, k) -> tuple[int, int, int]:
        """Index of the node at wave vector ``k``; raises if ``k`` is off-grid."""
        idx = []
        for comp in np.asarray(k, dtype=float):
            j = (comp + self.k_max) / self.dk - self.offset
            jr = int(round(j))
            if abs(j - jr) > 1e-9 or not 0 <= jr < self.n:
                raise ValueError(f"wave vector {tuple(k)} is not a node of {self}")
            idx.append(jr)
        return tuple(idx)

    def node(self, index) -> np.ndarray:
        return self.coords[(slice(None),) + tuple(index)].copy()


@dataclass(frozen=True)
class XGrid:
    n: int
    extent: float

    @property
    def spacing(self) -> float:
        return self.extent / self.n

    @property
    def cell_volume(self) -> float:
        return self.spacing**3

    @property
    def shape(self) -> tuple[int, int, int]:
        return (self.n, self.n, self.n)

    @cached_property
    def axis(self) -> np.ndarray:
        return _readonly((np.arange(self.n) - self.n // 2) * self.spacing)

    @cached_property
    def coords(self) -> np.ndarray:
        return _readonly(np.array(np.meshgrid(self.axis, self.axis, self.axis, indexing="ij")))

    @cached_property
    def radius(self) -> np.ndarray:
        x = self.coords
        return _readonly(np.sqrt(x[0] ** 2 + x[1] ** 2 + x[2] ** 2))

    def node_index(self, x) -> tuple[int, int, int]:
        idx = []
        for comp in np.asarray(x, dtype=float):
            m = comp / self.spacing + self.n // 2
            mr = int(round(m))
            if abs(m - mr) > 1e-9 or not 0 <= mr < self.n:
                raise ValueError(f"point {tuple(x)} is not a node of the x grid")
            idx.append(mr)
        return tuple(idx)

    def node(self, index) -> np.ndarray:
        return self.coords[(slice(None),) + tuple(index)].copy()


def make_grids(n: int, k_max: float, offset: float = 0.5) -> tuple[KGrid, XGrid]:
    """Build a conjugate (KGrid, XGrid) pair.

    Raises ``ValueError`` for odd or small ``n``, non-positive ``k_max`` and
    offsets that would put a node at ``|k| = 0`` or on the polar axis.
    """
    if int(n) != n or n < 8 or n % 2:
        raise ValueError(f"n must be an even integer >= 8, got {n!r}")
    if not k_max > 0:
        raise ValueError(f"k_max must be positive, got {k_max!r}")
    if not 0.0 <= offset < 1.0:
        raise ValueError(f"offset must lie in (0, 1), got {offset!r}")
    kgrid = KGrid(int(n), float(k_max), float(offset))
    # a zero coordinate on an axis puts nodes both at k = 0 and on the polar axis
    if np.any(np.abs(kgrid.axis) < 1e-12 * kgrid.dk):
        raise ValueError(
            f"offset={offset} places a node at |k| = 0 and on the polar axis"
        )
    xgrid = XGrid(int(n), np.pi * n / float(k_max))
    return kgrid, xgrid


def check_pair(kgrid: KGrid, xgrid: XGrid) -> None:
    if kgrid.n != xgrid.n or not np.isclose(
        xgrid.extent, np.pi * kgrid.n / kgrid.k_max, rtol=1e-13, atol=0.0
    ):
        raise ValueError("k and x grids are not a conjugate pair")


def _twist(kgrid: KGrid, xgrid: XGrid, sign: int) -> np.ndarray:
    t = np.exp(sign * 1j * kgrid.offset * kgrid.dk * xgrid.axis)
    return t[:, None, None] * t[None, :, None] * t[None, None, :]


_AXES = (-3, -2, -1)


def forward_transform(f: np.ndarray, kgrid: KGrid, xgrid: XGrid) -> np.ndarray:
    """x-space samples to k-space coefficients over the trailing three axes."""
    check_pair(kgrid, xgrid)
    g = np.asarray(f) * _twist(kgrid, xgrid, -1)
    g = scipy.fft.ifftshift(g, axes=_AXES)
    F = scipy.fft.fftn(g, axes=_AXES, workers=_workers())
    return scipy.fft.fftshift(F, axes=_AXES) * xgrid.cell_volume


def inverse_transform(F: np.ndarray, kgrid: KGrid, xgrid: XGrid) -> np.ndarray:
    """k-space coefficients to x-space samples over the trailing three axes."""
    check_pair(kgrid, xgrid)
    g = scipy.fft.ifftshift(np.asarray(F), axes=_AXES)
    f = scipy.fft.ifftn(g, axes=_AXES, workers=_workers())
    f = scipy.fft.fftshift(f, axes=_AXES)
    return f * (_twist(kgrid, xgrid, +1) / xgrid.cell_volume)


def bracket(f: np.ndarray, g: np.ndarray, grid: KGrid | XGrid) -> complex:
    """``<f|g>``, conjugate-linear in ``f``.

    On an XGrid the weight is ``dVx``; on a KGrid it is ``dVk / (2 pi)^3`` so
    both evaluations of the same pair agree (Parseval).
    Leading (component) axes are summed as a dot product.
    """
    f = np.asarray(f)
    g = np.asarray(g)
    if f.shape != g.shape or f.shape[-3:] != grid.shape:
        raise ValueError(f"shape mismatch: {f.shape} vs {g.shape} on {grid.shape} grid")
    weight = grid.measure if isinstance(grid, KGrid) else grid.cell_volume
    return complex(grid_sum((np.conj(f) * g).reshape((-1,) + grid.shape).sum(axis=0)) * weight)


def periodic_gradient(f: np.ndarray, xgrid: XGrid) -> np.ndarray:
    """Spectral gradient of a strictly periodic field (integer-harmonic FFT).

    Used for bilinear quantities such as currents, where the grid twist of
    the two factors cancels.
    """
    kk = 2.0 * np.pi * scipy.fft.fftfreq(xgrid.n, d=xgrid.spacing)
    F = scipy.fft.fftn(f, axes=_AXES, workers=_workers())
    out = []
    for ax in range(3):
        shape = [1, 1, 1]
        shape[ax] = xgrid.n
        kax = kk.reshape(shape).copy()
        if xgrid.n % 2 == 0:
            # Nyquist harmonic has no unique derivative
            kax.flat[xgrid.n // 2] = 0.0
        out.append(scipy.fft.ifftn(1j * kax * F, axes=_AXES, workers=_workers()))
    return np.array(out)


@dataclass(frozen=True)
class PolarizationFrame:
    """Spherical-polar unit vectors and helicity vectors at every k node.

    ``e_k, e_theta, e_phi`` are real ``(3, ...)`` arrays; ``e_helicity`` is a
    complex ``(2, 3, ...)`` array ordered as :data:`HELICITIES`.
    """

    e_k: np.ndarray
    e_theta: np.ndarray
    e_phi: np.ndarray
    e_helicity: np.ndarray

    def e(self, lam: int) -> np.ndarray:
        return self.e_helicity[HELICITIES.index(lam)]

    @property
    def cot_theta(self) -> np.ndarray:
        return self.e_k[2] / np.hypot(self.e_k[0], self.e_k[1])


def frame_at(k: np.ndarray) -> PolarizationFrame:
    """Frame for arbitrary wave vectors ``k`` of shape ``(3, ...)``.

    Undefined on the polar axis (``k_x = k_y = 0``).
    """
    k = np.asarray(k, dtype=float)
    knorm = np.sqrt(k[0] ** 2 + k[1] ** 2 + k[2] ** 2)
    rho = np.hypot(k[0], k[1])
    cos_t = k[2] / knorm
    sin_t = rho / knorm
    cos_p = k[0] / rho
    sin_p = k[1] / rho
    e_k = k / knorm
    e_theta = np.array([cos_t * cos_p, cos_t * sin_p, -sin_t])
    e_phi = np.array([-sin_p, cos_p, np.zeros_like(cos_p)])
    e_hel = np.array([(e_theta + 1j * lam * e_phi) / np.sqrt(2.0) for lam in HELICITIES])
    return PolarizationFrame(e_k, e_theta, e_phi, e_hel)


@lru_cache(maxsize=8)
def polarization_frame(kgrid: KGrid) -> PolarizationFrame:
    frame = frame_at(kgrid.coords)
    for a in (frame.e_k, frame.e_theta, frame.e_phi, frame.e_helicity):
        a.setflags(write=False)
    return frame
