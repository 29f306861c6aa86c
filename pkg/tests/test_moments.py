"""Maxwellian moment recursions checked against direct quadrature.

The closed-form half and full moments feed every kinetic flux evaluation,
so they are pinned to scipy.integrate.quad at tight tolerance.
"""
import numpy as np
import pytest
from scipy.integrate import quad

from asedf import (GasModel, prim_to_cons, euler_flux_x, psi_moment,
                   velocity_moments)

CASES = [(0.4, 1.3), (-2.0, 0.25), (3.5, 2.0)]


def _maxwellian(u, U, lam):
    return np.sqrt(lam / np.pi) * np.exp(-lam * (u - U) ** 2)


@pytest.mark.parametrize("U,lam", CASES)
def test_full_moments_match_quadrature(U, lam):
    got = velocity_moments(U, lam, n=6)
    for n in range(7):
        ref, err = quad(lambda u: u ** n * _maxwellian(u, U, lam),
                        -np.inf, np.inf)
        assert abs(got[n] - ref) < 1e-10 + 1e-10 * abs(ref)


@pytest.mark.parametrize("U,lam", CASES)
@pytest.mark.parametrize("half", [">0", "<0"])
def test_half_moments_match_quadrature(U, lam, half):
    got = velocity_moments(U, lam, n=6, half=half)
    lo, hi = (0, np.inf) if half == ">0" else (-np.inf, 0)
    for n in range(7):
        ref, err = quad(lambda u: u ** n * _maxwellian(u, U, lam), lo, hi)
        assert abs(got[n] - ref) < 1e-10 + 1e-10 * abs(ref)


def test_half_moments_sum_to_full():
    for U, lam in CASES:
        full = velocity_moments(U, lam, n=6)
        plus = velocity_moments(U, lam, n=6, half=">0")
        minus = velocity_moments(U, lam, n=6, half="<0")
        assert np.allclose(plus + minus, full, atol=1e-13)


def test_psi_moment_recovers_conserved_state(gas):
    rng = np.random.default_rng(8)
    for _ in range(6):
        q = np.array([rng.uniform(0.2, 3), rng.uniform(-2, 2),
                      rng.uniform(-2, 2), rng.uniform(0.2, 6)])
        w = prim_to_cons(q, gas)
        lam = q[0] / (2.0 * q[3])
        got = q[0] * psi_moment(q[1], q[2], lam, gas)
        assert np.allclose(got, w, rtol=1e-12, atol=1e-13)


def test_u_weighted_psi_moment_is_the_euler_flux(gas):
    rng = np.random.default_rng(21)
    for _ in range(6):
        q = np.array([rng.uniform(0.2, 3), rng.uniform(-2, 2),
                      rng.uniform(-2, 2), rng.uniform(0.2, 6)])
        w = prim_to_cons(q, gas)
        lam = q[0] / (2.0 * q[3])
        got = q[0] * psi_moment(q[1], q[2], lam, gas, a=1)
        assert np.allclose(got, euler_flux_x(w, gas), rtol=1e-12, atol=1e-13)


def test_psi_half_moments_partition_the_state(gas):
    q = np.array([1.7, 0.6, -0.4, 2.2])
    lam = q[0] / (2.0 * q[3])
    full = psi_moment(q[1], q[2], lam, gas)
    split = (psi_moment(q[1], q[2], lam, gas, half=">0")
             + psi_moment(q[1], q[2], lam, gas, half="<0"))
    assert np.allclose(split, full, atol=1e-13)


def test_internal_energy_accounts_for_extra_dof():
    # energy moment at rest: E/rho = p/((gamma-1) rho) = (K+2)/(4 lam)
    for gamma in (1.4, 5.0 / 3.0):
        gas = GasModel(gamma=gamma)
        lam = 0.8
        m = psi_moment(0.0, 0.0, lam, gas)
        assert m[3] == pytest.approx((gas.K + 2.0) / (4.0 * lam), rel=1e-13)
