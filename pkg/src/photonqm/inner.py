"""Covariant scalar product, Born-rule norms and momentum amplitudes."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

import numpy as np

from .grid import HELICITIES, XGrid, bracket, grid_sum
from .states import PhotonStateK, _as_index, project_psi


def _check_same_grid(s1: PhotonStateK, s2: PhotonStateK) -> None:
    if s1.grid != s2.grid:
        raise ValueError("states live on different k grids")


def scalar_product(s1: PhotonStateK, s2: PhotonStateK) -> complex:
    """``(s1, s2) = sum_lambda sum_k dVk/(2 pi)^3 conj(a1) a2 / omega_k``."""
    _check_same_grid(s1, s2)
    g = s1.grid
    # both amplitudes are taken on their own t_ref hyperplane
    if s1.t_ref != s2.t_ref:
        raise ValueError("states are referenced to different hyperplane times")
    if s1.amp is s2.amp:
        # self pairing: keep the result exactly real
        integrand = (np.abs(s1.amp) ** 2 / g.omega).sum(axis=0)
    else:
        integrand = (np.conj(s1.amp) * s2.amp / g.omega).sum(axis=0)
    return complex(grid_sum(integrand) * g.measure)


def scalar_product_xspace(s1: PhotonStateK, s2: PhotonStateK, xgrid: XGrid, t: float | None = None) -> complex:
    """Same product evaluated from synthesized fields on the t-hyperplane.

    Uses ``(i/2) sum_lambda [<E1|A2> - <A1|E2>]``: for ``s1 == s2`` the second
    term is the complex conjugate of the first, and the overall sign makes a
    plane wave paired with itself positive.
    """
    from .fields import synthesize_helicity

    _check_same_grid(s1, s2)
    t = s1.t_ref if t is None else t
    total = 0j
    for lam in HELICITIES:
        A1, E1 = synthesize_helicity(s1, xgrid, t, lam)
        A2, E2 = synthesize_helicity(s2, xgrid, t, lam)
        total += 0.5j * (bracket(E1, A2, xgrid) - bracket(A1, E2, xgrid))
    return complex(total)


def momentum_amplitude(state: PhotonStateK, k_node, lam: int) -> complex:
    """``(A_{k lambda}, A)``: pair the state with the discrete plane wave at ``k_node``."""
    from .states import plane_wave_state

    index = _as_index(state.grid, k_node)
    probe = plane_wave_state(state.grid, index, lam, state.t_ref)
    return scalar_product(probe, state)


@dataclass(frozen=True)
class NormReport:
    covariant_norm2: float
    density_norm2_x: float
    density_norm2_k: float
    per_helicity: dict

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)


def normalize_state(state: PhotonStateK) -> PhotonStateK:
    norm2 = scalar_product(state, state).real
    if not norm2 > 0:
        raise ValueError("the zero state cannot be normalized")
    return state * (1.0 / np.sqrt(norm2))


def born_report(state: PhotonStateK, xgrid: XGrid, normalize: bool = False) -> NormReport:
    """Covariant norm (1/omega weight) and the two Born-rule density norms.

    The density norms are ``sum_lambda int |psi_lambda|^2 dx`` and its k-space
    Parseval twin ``sum_lambda sum_k dVk/(2 pi)^3 |a_lambda|^2``. They agree
    with the covariant norm only for monochromatic states.
    """
    if normalize:
        state = normalize_state(state)
    g = state.grid
    psi = project_psi(state, xgrid).values
    per = {}
    cov = dx = dk = 0.0
    for h, lam in enumerate(HELICITIES):
        a2 = np.abs(state.amp[h]) ** 2
        c = float(grid_sum(a2 / g.omega)) * g.measure
        k = float(grid_sum(a2)) * g.measure
        x = float(grid_sum(np.abs(psi[h]) ** 2)) * xgrid.cell_volume
        per[str(lam)] = {"covariant_norm2": c, "density_norm2_x": x, "density_norm2_k": k}
        cov += c
        dx += x
        dk += k
    return NormReport(cov, dx, dk, per)
