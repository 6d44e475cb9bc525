"""Acceptance suite: one test per criterion, each printing a single pass/fail line."""

import time

import numpy as np
import pytest

from photonqm import make_grids, oracles
from photonqm.fields import continuity_residual, maxwell_residual, number, synthesize
from photonqm.inner import born_report, normalize_state, scalar_product, scalar_product_xspace
from photonqm.operators import commutator_residual, convergence_order, eigen_residual
from photonqm.propagation import (
    analytic_phi,
    causal_support,
    compact_odd_state,
    counterpropagating_split,
    radial_points,
    sample_amplitude,
)
from photonqm.quantization import ModeConvention, commutator_mode_sum
from photonqm.states import gaussian_state, plane_wave_state, position_eigenstate, project_psi

pytestmark = pytest.mark.acceptance


@pytest.fixture
def verdict(capsys):
    def emit(label, ok, detail, elapsed, budget):
        ok = ok and elapsed < budget
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] {label}: {detail} ({elapsed:.2f} s, budget {budget:g} s)")
        assert ok, f"{label}: {detail}"

    return emit


def _rms(a):
    return float(np.sqrt(np.mean(np.abs(a) ** 2)))


def test_criterion_01_biorthogonality(verdict):
    start = time.perf_counter()
    kg, _ = make_grids(64, 16.0)
    rng = np.random.default_rng(1)
    nodes = [tuple(int(i) for i in rng.integers(0, 64, 3)) for _ in range(4)]
    nodes.append((nodes[0][0], nodes[0][1], (nodes[0][2] + 1) % 64))
    waves = {(a, lam): plane_wave_state(kg, a, lam) for a in nodes for lam in (1, -1)}
    worst = 0.0
    for (a, la), wa in waves.items():
        scale = (2 * np.pi) ** 3 * kg.omega[a] / kg.cell_volume
        for (b, lb), wb in waves.items():
            v = scalar_product(wa, wb)
            expected = scale if (a == b and la == lb) else 0.0
            worst = max(worst, abs(v - expected) / scale)
    verdict("criterion 1 biorthogonality", worst <= 1e-12, f"max rel err {worst:.2e} <= 1e-12",
            time.perf_counter() - start, 1.0)


def test_criterion_02_localization(verdict):
    start = time.perf_counter()
    kg, xg = make_grids(64, 16.0)
    m = 32
    node = xg.node((m, m, m))
    psi = project_psi(position_eigenstate(kg, node, 1), xg).component(1)
    delta_err = abs(psi[m, m, m] * xg.cell_volume - 1.0)
    xp = node + np.array([0.31, -0.17, 0.43]) * xg.spacing
    psi_off = project_psi(position_eigenstate(kg, xp, 1), xg).component(1)
    ref = oracles.localized_psi(xg.coords, xp, kg.n, kg.k_max, kg.offset)
    tail_err = float(np.abs(psi_off - ref).max() / np.abs(ref).max())
    ok = delta_err <= 1e-12 and tail_err <= 1e-8
    verdict("criterion 2 localization", ok,
            f"node value err {delta_err:.2e}, off-node tails vs kernel {tail_err:.2e} <= 1e-8",
            time.perf_counter() - start, 5.0)


def test_criterion_03a_quadrature_oracle(verdict):
    start = time.perf_counter()
    k_max = 16.0
    eps = 4.0 / k_max
    half = np.pi * 64 / k_max / 2
    r = np.linspace(half / 100, half, 100)
    worst = 0.0
    for dt in (0.0, 1.0):
        q = np.array([oracles.quadrature_phi(ri, dt, eps) for ri in r])
        worst = max(worst, float(np.max(np.abs(q - analytic_phi(r, dt, eps)) / np.abs(q))))
    verdict("criterion 3a quadrature vs closed form", worst <= 1e-10, f"max rel err {worst:.2e} <= 1e-10",
            time.perf_counter() - start, 10.0)


def test_criterion_03b_grid_propagator(verdict):
    start = time.perf_counter()
    kg, xg = make_grids(64, 16.0)
    eps = 4.0 / kg.k_max
    half = xg.extent / 2
    r = np.linspace(half / 100, half, 100)
    state = position_eigenstate(kg, (0.0, 0.0, 0.0), 1, epsilon=eps)
    worst = 0.0
    for dt in (0.0, 1.0):
        g = sample_amplitude(state, radial_points(r, (1.0, 0.7, 0.4)), dt)
        worst = max(worst, float(np.max(np.abs(g - analytic_phi(r, dt, eps)) / np.abs(analytic_phi(r, dt, eps)))))
    verdict("criterion 3b grid phi vs closed form", worst <= 1e-6, f"max rel err {worst:.2e} <= 1e-6",
            time.perf_counter() - start, 10.0)


def test_criterion_04_psi_normalization(verdict):
    start = time.perf_counter()
    err = abs(oracles.psi_radial_integral(4.0 / 16.0) - 1.0)
    verdict("criterion 4 psi normalization", err <= 1e-8, f"|int psi - 1| = {err:.2e} <= 1e-8",
            time.perf_counter() - start, 1.0)


def test_criterion_05_counterpropagation(verdict):
    start = time.perf_counter()
    _, xg = make_grids(64, 40.0)
    half = np.array([xg.extent / 2])
    plus, minus = counterpropagating_split(half, 0.0, 1e-4, kind="psi")
    branch = float(min(abs(plus[0]), abs(minus[0])))
    total = float(abs(plus[0] + minus[0]))
    ok = branch >= 1e-3 and total <= 1e-6 and branch / total >= 1e3
    verdict("criterion 5 counterpropagation", ok,
            f"branch {branch:.2e} >= 1e-3, sum {total:.2e} <= 1e-6, ratio {branch / total:.0f} >= 1e3",
            time.perf_counter() - start, 5.0)


def test_criterion_06_parseval_born(verdict):
    start = time.perf_counter()
    kg, xg = make_grids(64, 16.0)
    s = normalize_state(gaussian_state(kg, (3.0, 2.0, 1.5), 1.2))
    rep = born_report(s, xg)
    dens = abs(rep.density_norm2_x - rep.density_norm2_k) / rep.density_norm2_k
    other = gaussian_state(kg, (-1.0, 2.0, 0.5), 1.4) + gaussian_state(kg, (2.0, 0.0, -1.0), 1.1, lam=-1)
    k = scalar_product(s, other)
    x = scalar_product_xspace(s, other, xg)
    cov = abs(x - k) / abs(k)
    verdict("criterion 6 Parseval/Born", dens <= 1e-10 and cov <= 1e-9,
            f"density norms {dens:.2e} <= 1e-10, covariant products {cov:.2e} <= 1e-9",
            time.perf_counter() - start, 5.0)


def test_criterion_07_position_operator(verdict):
    start = time.perf_counter()
    xp = (0.3, -0.2, 0.45)
    dks, eig, comm = [], [], []
    for n in (32, 48, 64):
        kg, _ = make_grids(n, 8.0)
        dks.append(kg.dk)
        eig.append(eigen_residual(kg, xp, 1))
        vec = gaussian_state(kg, (3.0, 2.0, 1.5), 1.2).vector()
        comm.append(np.sqrt(sum(commutator_residual(vec, kg, i, j) ** 2 for i, j in ((0, 1), (1, 2), (0, 2)))))
    oe, oc = convergence_order(dks, eig), convergence_order(dks, comm)
    ok = abs(oe - 2.0) <= 0.2 and abs(oc - 2.0) <= 0.2
    verdict("criterion 7 position operator", ok, f"eigen order {oe:.3f}, commutator order {oc:.3f}, target 2.0 +- 0.2",
            time.perf_counter() - start, 60.0)


def test_criterion_08_maxwell_continuity(verdict):
    start = time.perf_counter()
    kg, xg = make_grids(64, 16.0)
    s = gaussian_state(kg, (3.0, 2.0, 1.5), 1.2)
    snap = synthesize(s, xg, 0.5)
    div, curl = maxwell_residual(snap)
    mw = max(_rms(div), _rms(curl)) / _rms(snap.E)
    cont = continuity_residual(s, xg, 0.5)["relative"]
    n0 = number(s, xg)
    drift = max(abs(number(s, xg, t) - n0) for t in (0.5, 1.0, 3.0)) / n0
    ok = mw <= 1e-10 and cont <= 1e-6 and drift <= 1e-9
    verdict("criterion 8 Maxwell/continuity", ok,
            f"Maxwell {mw:.2e} <= 1e-10, continuity {cont:.2e} <= 1e-6, number drift {drift:.2e} <= 1e-9",
            time.perf_counter() - start, 10.0)


def test_criterion_09_commutators(verdict):
    start = time.perf_counter()
    kg, xg = make_grids(64, 16.0)
    o = xg.node((32, 32, 32))
    c0 = commutator_mode_sum(kg, o, o, 1, 1)
    coin = abs(c0 - (-1j / xg.cell_volume)) * xg.cell_volume
    x = xg.node((30, 35, 33))
    a0 = commutator_mode_sum(kg, x, o, 1, 1)
    a1 = commutator_mode_sum(kg, x, o, 1, 1, ModeConvention(0.5))
    b1 = commutator_mode_sum(kg, o, o, 1, 1, ModeConvention(0.5))
    alpha = max(abs(a1 - a0), abs(b1 - c0)) / abs(c0)
    off = abs(commutator_mode_sum(kg, o, o, 1, -1))
    ok = coin <= 1e-10 and alpha <= 1e-12 and off <= 1e-14
    verdict("criterion 9 commutators", ok,
            f"coincidence {coin:.2e} <= 1e-10, alpha 0 vs 1/2 {alpha:.2e} <= 1e-12, helicity off-diagonal {off:.2e} <= 1e-14",
            time.perf_counter() - start, 5.0)


def test_criterion_10_causality(verdict):
    start = time.perf_counter()
    kg, xg = make_grids(64, 16.0)
    L = xg.extent
    radius, dt = L / 8, L / 4
    pulse = compact_odd_state(kg, xg, radius)
    base = causal_support(pulse, xg, 0.0, radius)
    leak = causal_support(pulse, xg, dt, radius) - base
    control = causal_support(pulse, xg, dt, radius, part="full")
    ok = leak <= 1e-4 and control >= 10 * leak
    verdict("criterion 10 causality", ok,
            f"odd leakage {leak:.2e} <= 1e-4 (baseline {base:.1e}), full-density control {control:.2e} >= 10x",
            time.perf_counter() - start, 30.0)
