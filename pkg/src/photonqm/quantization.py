"""Second-quantization bookkeeping by explicit k-grid mode sums.

Field operators are linear in the mode operators,

    X = sum_{k, lambda} (u_{k lambda} a_{k lambda} + conj(u_{k lambda}) a^dagger_{k lambda}),

so every commutator and vacuum expectation between two of them is a c-number
sum over modes. Nothing is represented in Fock space.

On the grid ``delta(k - q)`` is a Kronecker delta divided by ``dVk``, so
``[a_lambda(k), a^dagger_lambda(k)] = (2 pi)^3 (2 omega_k)^(1 - 2 alpha) / dVk``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .grid import HELICITIES, KGrid, XGrid, grid_sum, polarization_frame
from .units import Units


@dataclass(frozen=True)
class ModeConvention:
    alpha: float = 0.0

    def mode_weight(self, omega: np.ndarray) -> np.ndarray:
        """Expansion weight ``(2 omega)^(alpha - 1)`` of each mode in the field operator."""
        return (2.0 * omega) ** (self.alpha - 1.0)

    def normalization(self, omega: np.ndarray, cell_volume: float) -> np.ndarray:
        return (2.0 * np.pi) ** 3 * (2.0 * omega) ** (1.0 - 2.0 * self.alpha) / cell_volume


def mode_commutator(kind1: str, kind2: str, k1, k2, lam1: int, lam2: int, norm: float) -> float:
    """c-number ``[op1, op2]`` for single mode operators ("a" or "ad").

    ``norm`` is the equal-mode normalization of ``[a, a^dagger]``.
    """
    for kind in (kind1, kind2):
        if kind not in ("a", "ad"):
            raise ValueError(f"unknown mode operator {kind!r}")
    if kind1 == kind2:
        return 0.0
    if tuple(k1) != tuple(k2) or lam1 != lam2:
        return 0.0
    return norm if kind1 == "a" else -norm


def _mode_functions(kgrid: KGrid, convention: ModeConvention, lam: int, t: float, x, field: str) -> np.ndarray:
    """Annihilation-part coefficients ``u_k`` (vector index first) of ``A`` or ``E`` at ``(t, x)``."""
    k = kgrid.coords
    x = np.asarray(x, dtype=float)
    phase = np.exp(-1j * (kgrid.omega * t - (k[0] * x[0] + k[1] * x[1] + k[2] * x[2])))
    u = kgrid.measure * convention.mode_weight(kgrid.omega) * phase * polarization_frame(kgrid).e(lam)
    if field == "A":
        return u
    if field == "E":
        # E = -dA/dt
        return 1j * kgrid.omega * u
    raise ValueError(f"unknown field {field!r}")


def _require_nodes(kgrid: KGrid, *points) -> None:
    xg = XGrid(kgrid.n, np.pi * kgrid.n / kgrid.k_max)
    for p in points:
        xg.node_index(p)


def _linear_commutator(u, v, norm) -> complex:
    """``[sum(u a + u* a^dag), sum(v a + v* a^dag)]`` over shared modes, dotted over the vector index."""
    return complex(grid_sum(norm * np.sum(u * np.conj(v) - np.conj(u) * v, axis=0)))


def _vacuum_pair(u, v, norm) -> complex:
    """``<0| X Y |0>``: only ``a a^dagger`` survives."""
    return complex(grid_sum(norm * np.sum(u * np.conj(v), axis=0)))


def commutator_mode_sum(
    kgrid: KGrid,
    x,
    x_prime,
    lam: int,
    lam_prime: int,
    convention: ModeConvention = ModeConvention(),
    t: float = 0.0,
    t_prime: float = 0.0,
    units: Units | None = None,
) -> complex:
    """``sum_j [A_{lambda j}(t, x), E_{lambda' j}(t', x')]``.

    Equal times give ``-(i hbar/eps0) delta_{lambda lambda'} Delta(x - x')`` with
    the band-limited delta ``Delta`` (``1/dVx`` at coincidence, zero at other nodes).
    """
    _require_nodes(kgrid, x, x_prime)
    norm = convention.normalization(kgrid.omega, kgrid.cell_volume)
    if lam != lam_prime:
        # the two operators share no modes, so every mode bracket vanishes
        value = 0j
    else:
        u = _mode_functions(kgrid, convention, lam, t, x, "A")
        v = _mode_functions(kgrid, convention, lam_prime, t_prime, x_prime, "E")
        value = _linear_commutator(u, v, norm)
    scale = 1.0 if units is None else units.hbar / units.eps0
    return value * scale


def one_photon_amplitude(
    kgrid: KGrid,
    x,
    lam: int,
    x_prime,
    lam_prime: int,
    t: float = 0.0,
    t_prime: float = 0.0,
    convention: ModeConvention = ModeConvention(),
) -> complex:
    """``(i/2) [<A_{x lambda} . E_{x' lambda'}> + <A_{x' lambda'} . E_{x lambda}>]``.

    Evaluates to ``(1/2) sum_k dVk/(2 pi)^3 cos(omega dt - k.(x - x'))``, i.e.
    half the real part of the propagated localized amplitude. Returns the
    complex value so callers can verify that its imaginary part vanishes.
    """
    _require_nodes(kgrid, x, x_prime)
    if lam != lam_prime:
        return 0.0 + 0.0j
    norm = convention.normalization(kgrid.omega, kgrid.cell_volume)
    A_x = _mode_functions(kgrid, convention, lam, t, x, "A")
    E_xp = _mode_functions(kgrid, convention, lam_prime, t_prime, x_prime, "E")
    A_xp = _mode_functions(kgrid, convention, lam_prime, t_prime, x_prime, "A")
    E_x = _mode_functions(kgrid, convention, lam, t, x, "E")
    return 0.5j * (_vacuum_pair(A_x, E_xp, norm) + _vacuum_pair(A_xp, E_x, norm))


@dataclass(frozen=True)
class CheckResult:
    name: str
    value: float
    tolerance: float
    passed: bool


def verify_mode_algebra(kgrid: KGrid, convention: ModeConvention = ModeConvention(), samples: int = 16, seed: int = 0) -> list[CheckResult]:
    """Check the mode-bracket table the mode-sum evaluator is built on."""
    rng = np.random.default_rng(seed)
    norm = convention.normalization(kgrid.omega, kgrid.cell_volume)
    idx = [tuple(int(i) for i in rng.integers(0, kgrid.n, 3)) for _ in range(samples)]
    checks = []

    worst_aa = max(
        abs(mode_commutator(a, a, i, j, l1, l2, float(norm[i])))
        for a in ("a", "ad") for i in idx for j in idx for l1 in HELICITIES for l2 in HELICITIES
    )
    checks.append(CheckResult("[a,a] = [ad,ad] = 0", worst_aa, 0.0, worst_aa == 0.0))

    worst_diag = 0.0
    for i in idx:
        expected = (2.0 * np.pi) ** 3 * (2.0 * kgrid.omega[i]) ** (1.0 - 2.0 * convention.alpha) / kgrid.cell_volume
        for lam in HELICITIES:
            got = mode_commutator("a", "ad", i, i, lam, lam, float(norm[i]))
            worst_diag = max(worst_diag, abs(got - expected) / expected)
    checks.append(CheckResult("[a,ad] equal-mode normalization", worst_diag, 1e-14, worst_diag <= 1e-14))

    worst_off = 0.0
    for i in idx:
        for j in idx:
            for l1 in HELICITIES:
                for l2 in HELICITIES:
                    if i == j and l1 == l2:
                        continue
                    worst_off = max(worst_off, abs(mode_commutator("a", "ad", i, j, l1, l2, float(norm[i]))))
    checks.append(CheckResult("[a,ad] off-diagonal", worst_off, 0.0, worst_off == 0.0))
    return checks


def report_json(checks: list[CheckResult]) -> str:
    return json.dumps(
        [{"name": c.name, "value": c.value, "tolerance": c.tolerance, "passed": c.passed} for c in checks],
        indent=2,
    )
