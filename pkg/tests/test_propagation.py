import csv

import numpy as np
import pytest

from photonqm import oracles
from photonqm.propagation import (
    CSV_HEADER,
    RadialProfile,
    analytic_phi,
    analytic_psi,
    branch_parts,
    causal_support,
    compact_odd_state,
    counterpropagating_split,
    green_functions,
    odd_part_profile,
    profile_set,
    radial_points,
    sample_amplitude,
    shell_integral,
    write_profiles_csv,
)
from photonqm.states import gaussian_state, position_eigenstate, project_phi

R = np.linspace(0.05, 3.0, 40)


@pytest.mark.parametrize("eps", [0.1, 0.25, 1.0])
def test_phi_matches_quadrature(eps):
    for r in (0.05, 0.4, 1.3, 3.0):
        q = oracles.quadrature_phi(r, 0.0, eps)
        assert abs(analytic_phi(r, 0.0, eps) - q) <= 1e-10 * abs(q)


def test_psi_integral_is_one():
    for eps in (1e-3, 0.25, 2.0):
        assert abs(oracles.psi_radial_integral(eps) - 1.0) <= 1e-8


def test_peak_on_light_cone():
    r, eps = 1.5, 1e-3
    dts = np.linspace(0.5, 2.5, 2001)
    mags = np.abs(analytic_phi(r, dts, eps))
    assert dts[np.argmax(mags)] == pytest.approx(r, abs=2e-3)


@pytest.mark.parametrize("fn", [analytic_phi, analytic_psi, odd_part_profile, green_functions])
def test_bad_inputs(fn):
    with pytest.raises(ValueError):
        fn(R, 0.5, 0.0)
    with pytest.raises(ValueError):
        fn(np.array([0.0, 1.0]), 0.5, 0.1)


def test_odd_part_symmetries():
    assert np.all(odd_part_profile(R, 0.0, 0.2) == 0)
    assert np.allclose(odd_part_profile(R, -0.8, 0.2), -odd_part_profile(R, 0.8, 0.2), rtol=1e-14)


def test_odd_shell_weight_tends_to_minus_dt():
    r = np.linspace(1e-4, 12.0, 400001)
    for dt in (1.0, 2.0, 3.0):
        errs = []
        for eps in (0.1, 0.03, 0.01):
            shell = shell_integral(r, odd_part_profile(r, dt, eps), dt, 1.0)
            errs.append(abs(shell / -dt - 1.0))
        assert errs[0] > errs[1] > errs[2]
        assert errs[-1] < 1e-2


def test_branch_recomposition():
    for dt in (0.0, 0.7, 2.0):
        p, m = counterpropagating_split(R, dt, 0.1)
        full = analytic_phi(R, dt, 0.1)
        assert np.abs(p + m - full).max() <= 1e-12 * np.abs(full).max()
        p, m = counterpropagating_split(R, dt, 0.1, kind="psi")
        full = analytic_psi(R, dt, 0.1)
        assert np.abs(p + m - full).max() <= 1e-12 * np.abs(full).max()
        for gamma, branch in ((1, counterpropagating_split(R, dt, 0.1)[0]), (-1, counterpropagating_split(R, dt, 0.1)[1])):
            d, pv = branch_parts(R, dt, 0.1, gamma)
            assert np.abs(d + pv - branch).max() <= 1e-12 * np.abs(branch).max()
    with pytest.raises(ValueError):
        counterpropagating_split(R, 0.0, 0.1, kind="rho")


def test_large_r_tails():
    r = np.array([50.0, 100.0])
    eps = 1e-3
    p, m = counterpropagating_split(r, 0.0, eps)
    assert np.allclose(np.abs(p), 1 / (4 * np.pi**2 * r**2), rtol=1e-6)
    # phi branches reinforce; psi branches cancel down to eps/r^4
    assert np.allclose(np.abs(p + m), 1 / (2 * np.pi**2 * r**2), rtol=1e-6)
    pp, pm = counterpropagating_split(r, 0.0, eps, kind="psi")
    assert np.all(np.abs(pp + pm) < 1e-2 * np.abs(pp))
    assert np.allclose(np.abs(pp + pm), eps / (np.pi**2 * r**4), rtol=1e-5)


def test_green_symmetries():
    eps = 0.05
    g = green_functions(R, 1.2, eps)
    gm = green_functions(R, -1.2, eps)
    assert np.allclose(g["green-unique"], gm["green-unique"], rtol=1e-14)
    assert np.allclose(g["green-retarded"], gm["green-advanced"], rtol=1e-14)


def test_retarded_shell():
    eps, dt = 1e-3, 1.5
    r = np.linspace(1e-4, 6.0, 600001)
    ret = green_functions(r, dt, eps)["green-retarded"]
    assert np.allclose(ret, (eps / (np.pi * ((r - dt) ** 2 + eps**2))) / (2 * np.pi * r), rtol=1e-9)
    total = shell_integral(r, ret, 3.0, 3.0)
    near = shell_integral(r, ret, dt, 0.1)
    assert near / total > 0.99
    assert r[np.argmax(ret * r**2)] == pytest.approx(dt, abs=1e-3)


def test_phi_wave_equation_stencil():
    # r phi splits into functions of r - t and r + t, so equal-step centered
    # stencils in t and r carry identical truncation error and the residual
    # sits at roundoff, well inside the O(h^2) bound
    eps, r0, t0 = 0.3, 1.1, 0.4
    scale = abs(analytic_phi(r0, t0, eps))
    for h in (1e-2, 5e-3):
        d2t = (analytic_phi(r0, t0 + h, eps) - 2 * analytic_phi(r0, t0, eps) + analytic_phi(r0, t0 - h, eps)) / h**2
        u = lambda r: r * analytic_phi(r, t0, eps)
        d2r = (u(r0 + h) - 2 * u(r0) + u(r0 - h)) / h**2 / r0
        assert abs(d2t - d2r) <= h**2 * scale


def test_radial_profile_validation_and_csv(tmp_path):
    with pytest.raises(ValueError):
        RadialProfile(R, R, 0.0, 0.1, "bogus")
    with pytest.raises(ValueError):
        RadialProfile(np.array([0.0, 1.0]), np.zeros(2), 0.0, 0.1, "phi-full")
    profiles = profile_set(R[:5], 0.5, 0.1)
    assert {p.kind for p in profiles} >= {"phi-full", "odd-part", "gamma+", "gamma-", "green-retarded"}
    path = tmp_path / "p.csv"
    write_profiles_csv(path, profiles)
    rows = list(csv.reader(path.open()))
    assert tuple(rows[0]) == CSV_HEADER
    assert len(rows) == 1 + 5 * len(profiles)
    first = profiles[0]
    assert float(rows[1][3]) == complex(first.values[0]).real


def test_sample_amplitude_matches_grid(small):
    kg, xg = small
    s = gaussian_state(kg, (1.0, 0.5, -0.5), 1.5)
    idx = [(3, 4, 5), (8, 8, 8), (15, 0, 9)]
    pts = np.array([xg.node(i) for i in idx])
    vals = sample_amplitude(s, pts, 0.3)
    phi = project_phi(s, xg, 0.3).component(1)
    assert np.allclose(vals, [phi[i] for i in idx], rtol=1e-12)
    with pytest.raises(ValueError):
        sample_amplitude(s, pts, kind="rho")
    assert np.allclose(np.linalg.norm(radial_points(R, (1, 1, 0)), axis=1), R)


def test_causal_support_baseline(small):
    kg, xg = small
    radius = xg.extent / 8
    s = compact_odd_state(kg, xg, radius)
    assert causal_support(s, xg, 0.0, radius) < 1e-20
    with pytest.raises(ValueError):
        causal_support(s, xg, 0.1, radius, part="even")


def test_regularized_eigenstate_sample_near_origin(desk):
    kg, xg = desk
    eps = 4 / kg.k_max
    s = position_eigenstate(kg, (0, 0, 0), 1, epsilon=eps)
    r = np.array([0.3])
    v = sample_amplitude(s, radial_points(r, (1, 0.7, 0.4)))
    assert abs(v[0] - analytic_phi(r, 0.0, eps)[0]) < 0.05 * abs(analytic_phi(r, 0.0, eps)[0])
