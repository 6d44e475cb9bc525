"""Time evolution and closed-form propagators of localized states (c = 1).

With the exponential cutoff ``exp(-eps |k|)`` the scalar amplitudes of a
position eigenvector evaluate in closed form. Writing ``s = eps + i dt``:

    phi_eps(r, dt) = 1 / (2 pi^2 (r^2 + s^2))
    psi_eps(r, dt) = s / (pi^2 (s^2 + r^2)^2)

and ``phi_eps`` splits into two counterpropagating branches

    phi_gamma = 1/(4 pi^2 r) * 1/(r - gamma dt + i gamma eps)
              = 1/(4 pi^2 r) [P_eps(r - gamma dt) - i gamma pi delta_eps(r - gamma dt)]

with ``delta_eps(u) = eps / (pi (u^2 + eps^2))`` and ``P_eps(u) = u / (u^2 + eps^2)``.
The imaginary (odd) part is then exactly
``(1/(4 pi r)) [delta_eps(r + dt) - delta_eps(r - dt)]``.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .grid import XGrid, grid_sum
from .states import PhotonStateK, from_helicity, even_odd_parts, project_psi
from .grid import forward_transform

PROFILE_KINDS = (
    "phi-full",
    "psi-full",
    "odd-part",
    "gamma+",
    "gamma-",
    "psi-gamma+",
    "psi-gamma-",
    "green-unique",
    "green-retarded",
    "green-advanced",
)


def evolve(state: PhotonStateK, dt: float) -> PhotonStateK:
    """Advance by ``dt``: ``a -> a exp(-i omega dt)``; ``t_ref`` is unchanged."""
    return state.with_amp(state.amp * np.exp(-1j * state.grid.omega * dt))


def sample_amplitude(state: PhotonStateK, points, t: float | None = None, lam: int = 1, kind: str = "phi") -> np.ndarray:
    """Evaluate the grid mode sum for ``phi`` or ``psi`` at arbitrary points (shape ``(m, 3)``).

    Direct summation over every k node, so the points need not be x-grid nodes.
    """
    g = state.grid
    t = state.t_ref if t is None else t
    a = state.component(lam) * np.exp(-1j * g.omega * (t - state.t_ref))
    if kind == "phi":
        a = a / g.omega
    elif kind != "psi":
        raise ValueError(f"unknown amplitude kind {kind!r}")
    k = g.coords.reshape(3, -1)
    a = a.ravel()
    out = np.empty(len(points), dtype=complex)
    for i, x in enumerate(np.asarray(points, dtype=float)):
        out[i] = grid_sum(a * np.exp(1j * (x @ k)), axes=1)
    return out * g.measure


def radial_points(r, direction=(1.0, 0.0, 0.0)) -> np.ndarray:
    d = np.asarray(direction, dtype=float)
    d = d / np.linalg.norm(d)
    return np.asarray(r, dtype=float)[:, None] * d[None, :]


def _check(r, eps):
    if np.any(np.asarray(eps) <= 0):
        raise ValueError("epsilon must be positive")
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise ValueError("radial samples must be strictly positive")
    return r


def delta_eps(u, eps):
    return eps / (np.pi * (np.asarray(u) ** 2 + eps**2))


def principal_eps(u, eps):
    u = np.asarray(u)
    return u / (u**2 + eps**2)


def analytic_phi(r, dt, eps):
    r = _check(r, eps)
    s = eps + 1j * dt
    return 1.0 / (2.0 * np.pi**2 * (r**2 + s**2))


def analytic_psi(r, dt, eps):
    r = _check(r, eps)
    s = eps + 1j * dt
    return s / (np.pi**2 * (s**2 + r**2) ** 2)


def odd_part_profile(r, dt, eps):
    """Imaginary part of ``phi_eps``: two shells of opposite sign at ``r = |dt|``."""
    return analytic_phi(r, dt, eps).imag


def counterpropagating_split(r, dt, eps, kind: str = "phi"):
    """``(gamma=+, gamma=-)`` branches whose sum is ``analytic_phi`` (or ``analytic_psi``).

    ``kind="psi"`` returns the branches of ``psi = i d/dt phi``. At ``dt = 0``
    their ``1/r^3`` tails cancel in the sum, leaving a profile that decays as
    ``eps / r^4``; the phi branches instead add up their ``1/r^2`` tails.
    """
    r = _check(r, eps)
    out = []
    for gamma in (1, -1):
        u = r - gamma * dt + 1j * gamma * eps
        if kind == "phi":
            out.append(1.0 / (4.0 * np.pi**2 * r * u))
        elif kind == "psi":
            # i d/dt of 1/u with du/dt = -gamma
            out.append(1j * gamma / (4.0 * np.pi**2 * r * u**2))
        else:
            raise ValueError(f"unknown branch kind {kind!r}")
    return out[0], out[1]


def branch_parts(r, dt, eps, gamma: int):
    """Delta and principal-value parts of one phi branch, returned separately."""
    r = _check(r, eps)
    u = r - gamma * dt
    pre = 1.0 / (4.0 * np.pi**2 * r)
    return -1j * gamma * np.pi * pre * delta_eps(u, eps), pre * principal_eps(u, eps)


def green_functions(r, dt, eps) -> dict:
    """Unique, retarded and advanced kernels built from the regularized shells.

    ``unique = (1/(4 pi r)) [delta(r + dt) + delta(r - dt)]``; adding or
    subtracting the odd (homogeneous) solution leaves a single shell of
    weight ``1/(2 pi r)`` on the future (retarded) or past (advanced) cone.
    """
    r = _check(r, eps)
    unique = (delta_eps(r + dt, eps) + delta_eps(r - dt, eps)) / (4.0 * np.pi * r)
    odd = odd_part_profile(r, dt, eps)
    return {
        "green-unique": unique,
        "green-retarded": unique - odd,
        "green-advanced": unique + odd,
    }


@dataclass(frozen=True)
class RadialProfile:
    r: np.ndarray
    values: np.ndarray
    delta_t: float
    epsilon: float
    kind: str

    def __post_init__(self):
        if self.kind not in PROFILE_KINDS:
            raise ValueError(f"unknown profile kind {self.kind!r}")
        if np.any(np.asarray(self.r) <= 0):
            raise ValueError("radial samples must be strictly positive")

    def rows(self):
        vals = np.asarray(self.values, dtype=complex)
        for r, v in zip(np.asarray(self.r, dtype=float), vals):
            yield (repr(float(r)), repr(float(self.delta_t)), repr(float(self.epsilon)),
                   repr(float(v.real)), repr(float(v.imag)), self.kind)


def profile_set(r, dt, eps) -> list[RadialProfile]:
    """Every closed-form profile at one ``(dt, eps)``."""
    r = _check(r, eps)
    plus, minus = counterpropagating_split(r, dt, eps)
    pplus, pminus = counterpropagating_split(r, dt, eps, kind="psi")
    data = {
        "phi-full": analytic_phi(r, dt, eps),
        "psi-full": analytic_psi(r, dt, eps),
        "odd-part": odd_part_profile(r, dt, eps),
        "gamma+": plus,
        "gamma-": minus,
        "psi-gamma+": pplus,
        "psi-gamma-": pminus,
    }
    data.update(green_functions(r, dt, eps))
    return [RadialProfile(r, v, dt, eps, kind) for kind, v in data.items()]


CSV_HEADER = ("r", "delta_t", "epsilon", "re", "im", "kind")


def write_profiles_csv(path, profiles) -> None:
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for p in profiles:
            w.writerows(p.rows())


def shell_integral(r, values, center: float, half_width: float) -> float:
    """``int values 4 pi r^2 dr`` over ``|r - center| <= half_width`` (trapezoid on the samples)."""
    r = np.asarray(r, dtype=float)
    m = np.abs(r - center) <= half_width
    return float(np.trapezoid(4.0 * np.pi * r[m] ** 2 * np.asarray(values)[m], r[m]))


def compact_bump(xgrid: XGrid, radius: float, center=(0.0, 0.0, 0.0)) -> np.ndarray:
    """Smooth real bump ``exp(1 - 1/(1 - (r/R)^2))`` supported in ``r < radius``."""
    x = xgrid.coords
    c = np.asarray(center, dtype=float)
    r2 = sum((x[i] - c[i]) ** 2 for i in range(3)) / radius**2
    inside = r2 < 1.0
    out = np.zeros(xgrid.shape)
    out[inside] = np.exp(1.0 - 1.0 / (1.0 - r2[inside]))
    return out


def compact_odd_state(kgrid, xgrid: XGrid, radius: float, lam: int = 1) -> PhotonStateK:
    """State whose psi at ``t_ref`` is ``i f / sqrt 2`` for a compact bump ``f``.

    Its even part vanishes and its odd part equals ``f`` at ``t_ref``.
    """
    f = compact_bump(xgrid, radius)
    a = forward_transform(1j * f / np.sqrt(2.0), kgrid, xgrid)
    return from_helicity(kgrid, lam, a)


def causal_support(state: PhotonStateK, xgrid: XGrid, dt: float, radius: float, part: str = "odd", lam: int = 1) -> float:
    """Fraction of density outside ``r > radius + |dt|`` after evolving by ``dt``.

    ``part="odd"`` uses ``psi_s^2`` only; ``part="full"`` uses the complete
    positive-frequency density ``psi_c^2 + psi_s^2 = 2 |psi|^2``.
    """
    psi = project_psi(state, xgrid, state.t_ref + dt).component(lam)
    c, s = even_odd_parts(psi)
    if part == "odd":
        rho = s**2
    elif part == "full":
        rho = c**2 + s**2
    else:
        raise ValueError(f"unknown density part {part!r}")
    total = float(grid_sum(rho))
    if total == 0.0:
        return 0.0
    outside = xgrid.radius > radius + abs(dt)
    return float(grid_sum(np.where(outside, rho, 0.0))) / total
