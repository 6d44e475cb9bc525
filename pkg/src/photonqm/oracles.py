"""Reference values computed without the grid machinery.

These back the acceptance checks: a 1-d Fourier-sine quadrature for the
regularized localized amplitude, a radial quadrature for its normalization and
the per-axis geometric-sum kernel for off-node localization.
"""

from __future__ import annotations

import numpy as np
from scipy import integrate


# exp(-eps k) is below 1e-19 past this many decay lengths
_DECAY_LENGTHS = 44.0


def _damped(eps: float, w: float, weight: str) -> float:
    """``int_0^inf exp(-eps k) sin|cos(|w| k) dk`` by QAWO on the effective support."""
    upper = _DECAY_LENGTHS / eps
    val, _ = integrate.quad(lambda k: np.exp(-eps * k), 0.0, upper, weight=weight, wvar=abs(w),
                            epsabs=0.0, epsrel=1e-13, limit=400)
    return float(val)


def _damped_sine(eps: float, w: float) -> float:
    if w == 0.0:
        return 0.0
    return float(np.sign(w)) * _damped(eps, w, "sin")


def _damped_cosine(eps: float, w: float) -> float:
    if w == 0.0:
        return 1.0 / eps
    return _damped(eps, w, "cos")


def quadrature_phi(r: float, dt: float, eps: float) -> complex:
    """``(1/(2 pi^2 r)) int_0^inf exp(-eps k) exp(-i k dt) sin(k r) dk``.

    The oscillatory products are split into single-frequency sine/cosine
    transforms so the weighted (QAWO) rule handles each piece.
    """
    if r <= 0 or eps <= 0:
        raise ValueError("r and eps must be positive")
    # cos(k dt) sin(k r) and sin(k dt) sin(k r) as sums of single harmonics
    re = 0.5 * (_damped_sine(eps, r + dt) + _damped_sine(eps, r - dt))
    im = -0.5 * (_damped_cosine(eps, r - dt) - _damped_cosine(eps, r + dt))
    return complex(re, im) / (2.0 * np.pi**2 * r)


def psi_radial_integral(eps: float, dt: float = 0.0) -> complex:
    """``int_0^inf 4 pi r^2 psi_eps(r, dt) dr`` with the closed-form ``psi_eps``."""
    s = eps + 1j * dt

    def part(r, fn):
        return fn(4.0 * np.pi * r**2 * s / (np.pi**2 * (s**2 + r**2) ** 2))

    re, _ = integrate.quad(part, 0.0, np.inf, args=(np.real,), epsabs=0.0, epsrel=1e-13, limit=200)
    im, _ = integrate.quad(part, 0.0, np.inf, args=(np.imag,), epsabs=0.0, epsrel=1e-13, limit=200)
    return complex(re, im)


def axis_kernel(u, n: int, k_max: float, offset: float = 0.5) -> np.ndarray:
    """``(dk/2 pi) sum_j exp(i k_j u)`` over one grid axis, summed in closed form.

    At ``u = 0`` it equals ``1/dx``; the continuum limit is ``sin(k_max u)/(pi u)``.
    """
    u = np.asarray(u, dtype=float)
    dk = 2.0 * k_max / n
    k0 = -k_max + offset * dk
    z = np.exp(1j * dk * u)
    small = np.abs(z - 1.0) < 1e-13
    zs = np.where(small, 0.5, z)
    geo = np.where(small, n, (zs**n - 1.0) / (zs - 1.0))
    return dk / (2.0 * np.pi) * np.exp(1j * k0 * u) * geo


def localized_psi(x: np.ndarray, x_prime, n: int, k_max: float, offset: float = 0.5) -> np.ndarray:
    """Grid ``psi`` of the ``alpha = 0`` eigenstate at ``x'`` and ``t = t'``, axis by axis."""
    out = np.ones(np.asarray(x[0]).shape, dtype=complex)
    for i in range(3):
        out = out * axis_kernel(x[i] - x_prime[i], n, k_max, offset)
    return out
