"""Helicity-resolved photon quantum mechanics on conjugate spectral grids."""

from .grid import (
    HELICITIES,
    FourVector,
    KGrid,
    PolarizationFrame,
    XGrid,
    bracket,
    forward_transform,
    inverse_transform,
    make_grids,
    polarization_frame,
)
from .states import (
    PhotonStateK,
    gaussian_state,
    plane_wave_state,
    position_eigenstate,
    project_phi,
    project_psi,
)
from .inner import born_report, scalar_product, scalar_product_xspace
from .units import Units

__version__ = "0.1.0"

__all__ = [
    "HELICITIES",
    "FourVector",
    "KGrid",
    "PolarizationFrame",
    "PhotonStateK",
    "Units",
    "XGrid",
    "born_report",
    "bracket",
    "forward_transform",
    "gaussian_state",
    "inverse_transform",
    "make_grids",
    "plane_wave_state",
    "polarization_frame",
    "position_eigenstate",
    "project_phi",
    "project_psi",
    "scalar_product",
    "scalar_product_xspace",
    "__version__",
]
