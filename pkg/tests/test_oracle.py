import math

import numpy as np
import pytest
from hypothesis import given, settings

from xdiscord.discord import closest_classical3, discord2, discord3
from xdiscord.linalg import is_psd, partial_trace
from xdiscord.oracle import (
    SphereGrid,
    golden_section,
    hs_distance_to_classical,
    measured_state,
    oracle_discord_measurement,
    oracle_discord_sphere,
)
from xdiscord.xstates import XClass, bell_type, ghz_mixed, random_state, random_x_state, w_mixed

from .conftest import seeds, seeded_states

PS = np.linspace(0, 1, 11)


def bell_pair():
    psi = np.array([1, 0, 0, 1]) / math.sqrt(2)
    return np.outer(psi, psi).astype(complex)


def test_grid_validation():
    with pytest.raises(ValueError):
        SphereGrid(n_theta=4)
    with pytest.raises(ValueError):
        SphereGrid(n_phi=8)
    with pytest.raises(ValueError):
        SphereGrid(refine_tol=0)
    theta, phi = SphereGrid(16, 32).angles()
    assert theta[0] == 0 and theta[-1] == pytest.approx(math.pi)
    assert len(theta) == 17 and len(phi) == 32


def test_golden_section():
    x, fx = golden_section(lambda t: (t - 0.3) ** 2, -1, 1)
    assert x == pytest.approx(0.3, abs=1e-8)
    assert fx <= 1e-16


def test_sphere_oracle_examples():
    assert oracle_discord_sphere(ghz_mixed(0.5)) == pytest.approx(0.125, abs=1e-6)
    assert oracle_discord_sphere(np.eye(8) / 8) == pytest.approx(0, abs=1e-12)


def test_measurement_oracle_examples():
    assert oracle_discord_measurement(bell_pair()) == pytest.approx(0.5, abs=1e-6)
    assert oracle_discord_measurement(ghz_mixed(0.0)) == pytest.approx(0.5, abs=1e-6)
    diag = np.diag(np.arange(1, 9) / 36).astype(complex)
    assert oracle_discord_measurement(diag) == pytest.approx(0, abs=1e-10)


@pytest.mark.parametrize("xclass, seed", [(XClass.CLASS1, 11), (XClass.CLASS2, 12)])
def test_oracles_match_analytic(xclass, seed):
    grid = SphereGrid()
    for rho in seeded_states(xclass, 25, seed):
        analytic = discord3(rho).value
        sphere = oracle_discord_sphere(rho, grid, full=True)
        meas = oracle_discord_measurement(rho, grid, full=True)
        assert abs(sphere.value - analytic) <= 1e-6
        assert abs(meas.value - analytic) <= 1e-6
        assert abs(sphere.value - meas.value) <= 2 * grid.refine_tol
        # the analytic value is the global minimum of the same objective
        assert sphere.grid_value >= analytic - 1e-12
        assert meas.grid_value >= analytic - 1e-12


@pytest.mark.parametrize("p", PS)
def test_oracles_on_families(p):
    for rho in (ghz_mixed(p), w_mixed(p)):
        analytic = discord3(rho).value
        assert oracle_discord_sphere(rho) == pytest.approx(analytic, abs=1e-6)
        assert oracle_discord_measurement(rho) == pytest.approx(analytic, abs=1e-6)


def test_oracles_on_bell_family():
    rng = np.random.default_rng(5)
    for _ in range(5):
        c = rng.uniform(-0.5, 0.5, 3)
        rho = bell_type(*c)
        analytic = discord3(rho).value
        assert oracle_discord_sphere(rho) == pytest.approx(analytic, abs=1e-6)
        assert oracle_discord_measurement(rho) == pytest.approx(analytic, abs=1e-6)


@settings(max_examples=10)
@given(seed=seeds)
def test_oracles_on_general_states(seed):
    # the analytic tensor route does not need the X pattern
    rng = np.random.default_rng(seed)
    rho = random_state(8, rng)
    analytic = discord3(rho).value
    assert oracle_discord_sphere(rho) == pytest.approx(analytic, abs=1e-6)
    assert oracle_discord_measurement(rho) == pytest.approx(analytic, abs=1e-6)
    rho2 = random_state(4, rng)
    assert oracle_discord_measurement(rho2) == pytest.approx(discord2(rho2).value, abs=1e-6)


def test_nested_grids_never_increase_minimum():
    for rho in seeded_states(XClass.CLASS1, 5, 21) + seeded_states(XClass.CLASS2, 5, 22):
        prev = math.inf
        for n in (8, 16, 32, 64):
            g = oracle_discord_sphere(rho, SphereGrid(n, 2 * n), full=True).grid_value
            assert g <= prev + 1e-15
            prev = g


def test_measured_state_is_classical_and_psd(rng):
    rho = random_state(8, rng)
    e = rng.standard_normal(3)
    e /= np.linalg.norm(e)
    chi = measured_state(rho, e)
    assert is_psd(chi)
    assert np.trace(chi).real == pytest.approx(1)
    assert discord3(chi).value <= 1e-12


def test_hs_distance_to_classical(rng):
    rho = random_state(8, rng)
    assert hs_distance_to_classical(rho, rho) == 0
    purity = np.trace(rho @ rho).real
    assert hs_distance_to_classical(rho, np.eye(8) / 8) == pytest.approx(purity - 1 / 8, abs=1e-14)
    chi = closest_classical3(ghz_mixed(0.0)).chi
    assert hs_distance_to_classical(ghz_mixed(0.0), chi) == pytest.approx(0.5, abs=1e-14)
    with pytest.raises(ValueError):
        hs_distance_to_classical(rho, np.eye(4))


def test_reductions_match_measurement_oracle(rng):
    for xclass in (XClass.CLASS1, XClass.CLASS2):
        rho = random_x_state(xclass, rng)
        for k in (2, 3):
            red = partial_trace(rho, k)
            assert discord2(red).value == pytest.approx(oracle_discord_measurement(red), abs=1e-6)
