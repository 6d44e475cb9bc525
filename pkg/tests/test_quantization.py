import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from photonqm.quantization import (
    ModeConvention,
    commutator_mode_sum,
    mode_commutator,
    one_photon_amplitude,
    report_json,
    verify_mode_algebra,
)
from photonqm.states import position_eigenstate, project_psi
from photonqm.units import Units

node_idx = st.tuples(*(st.integers(0, 15),) * 3)


def test_convention_weight_product(small):
    kg, _ = small
    for alpha in (0.0, 0.25, 0.5, 1.0):
        c = ModeConvention(alpha)
        prod = c.mode_weight(kg.omega) ** 2 * c.normalization(kg.omega, 1.0) / (2 * np.pi) ** 3
        assert np.allclose(prod, 1 / (2 * kg.omega), rtol=1e-14)


def test_coincidence(small):
    kg, xg = small
    o = xg.node((8, 8, 8))
    for alpha in (0.0, 0.5):
        v = commutator_mode_sum(kg, o, o, 1, 1, ModeConvention(alpha))
        assert abs(v - (-1j / xg.cell_volume)) <= 1e-10 / xg.cell_volume


def test_si_units_scale(small):
    kg, xg = small
    o = xg.node((8, 8, 8))
    u = Units.si()
    v = commutator_mode_sum(kg, o, o, 1, 1, units=u)
    assert v == pytest.approx(-1j * u.hbar / u.eps0 / xg.cell_volume, rel=1e-10)


def test_helicity_offdiagonal(small):
    kg, xg = small
    o = xg.node((8, 8, 8))
    assert abs(commutator_mode_sum(kg, o, o, 1, -1)) <= 1e-14
    assert one_photon_amplitude(kg, o, 1, o, -1) == 0


def test_off_grid_rejected(small):
    kg, _ = small
    with pytest.raises(ValueError):
        commutator_mode_sum(kg, (0.1, 0, 0), (0, 0, 0), 1, 1)
    with pytest.raises(ValueError):
        one_photon_amplitude(kg, (0, 0, 0), 1, (0.1, 0, 0), 1)


@given(node_idx, node_idx)
def test_alpha_invariance_and_locality(a, b):
    from photonqm import make_grids

    kg, xg = make_grids(16, 8.0)
    x, xp = xg.node(a), xg.node(b)
    c0 = commutator_mode_sum(kg, x, xp, 1, 1)
    c1 = commutator_mode_sum(kg, x, xp, 1, 1, ModeConvention(0.5))
    peak = 1.0 / xg.cell_volume
    assert abs(c1 - c0) <= 1e-12 * peak
    if max(abs(i - j) for i, j in zip(a, b)) >= 4:
        assert abs(c0) <= 1e-2 * peak


@given(node_idx, node_idx, st.floats(-1.0, 1.0))
def test_one_photon_symmetry_and_reality(a, b, dt):
    from photonqm import make_grids

    kg, xg = make_grids(16, 8.0)
    x, xp = xg.node(a), xg.node(b)
    v = one_photon_amplitude(kg, x, 1, xp, 1, dt, 0.0)
    w = one_photon_amplitude(kg, xp, 1, x, 1, 0.0, dt)
    scale = 1.0 / xg.cell_volume
    assert abs(v - w) <= 1e-13 * scale
    assert abs(v.imag) <= 1e-13 * scale


def test_one_photon_coincidence_matches_half_psi(small):
    kg, xg = small
    o = xg.node((8, 8, 8))
    psi = project_psi(position_eigenstate(kg, o, 1), xg).component(1)[8, 8, 8]
    v = one_photon_amplitude(kg, o, 1, o, 1)
    assert v == pytest.approx(0.5 * psi, rel=1e-12)


def test_mode_commutator_table():
    assert mode_commutator("a", "ad", (1, 2, 3), (1, 2, 3), 1, 1, 5.0) == 5.0
    assert mode_commutator("ad", "a", (1, 2, 3), (1, 2, 3), 1, 1, 5.0) == -5.0
    assert mode_commutator("a", "a", (1, 2, 3), (1, 2, 3), 1, 1, 5.0) == 0.0
    assert mode_commutator("a", "ad", (1, 2, 3), (1, 2, 4), 1, 1, 5.0) == 0.0
    with pytest.raises(ValueError):
        mode_commutator("b", "a", (0, 0, 0), (0, 0, 0), 1, 1, 1.0)


@pytest.mark.parametrize("alpha", [0.0, 0.5])
def test_verify_mode_algebra(small, alpha):
    kg, _ = small
    checks = verify_mode_algebra(kg, ModeConvention(alpha), samples=6)
    assert all(c.passed for c in checks)
    payload = json.loads(report_json(checks))
    assert {"name", "value", "tolerance", "passed"} <= set(payload[0])


def test_alpha_half_normalization(small):
    kg, _ = small
    norm = ModeConvention(0.5).normalization(kg.omega, kg.cell_volume)
    assert np.allclose(norm, (2 * np.pi) ** 3 / kg.cell_volume, rtol=1e-15)
