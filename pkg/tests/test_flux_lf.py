import numpy as np
import pytest

from asedf import (GasModel, StateInvalid, prim_to_cons, euler_flux_x,
                   lf_flux, lf_flux_patch)


def _reference(wl, wr, gas):
    """Independent central-plus-dissipation transcription."""
    def prim(w):
        rho = w[0]
        U, V = w[1] / rho, w[2] / rho
        p = (gas.gamma - 1.0) * (w[3] - 0.5 * rho * (U * U + V * V))
        return rho, U, V, p

    rl, Ul, Vl, pl = prim(wl)
    rr, Ur, Vr, pr = prim(wr)
    a = max(abs(Ul) + np.sqrt(gas.gamma * pl / rl),
            abs(Ur) + np.sqrt(gas.gamma * pr / rr))
    return 0.5 * (euler_flux_x(wl, gas) + euler_flux_x(wr, gas)) \
        - 0.5 * a * (wr - wl)


def test_consistency_with_euler_flux(gas):
    w = prim_to_cons(np.array([1.2, -0.4, 0.3, 2.0]), gas)
    assert np.abs(lf_flux(w, w, gas) - euler_flux_x(w, gas)).max() < 1e-13


def test_matches_reference_formula(gas):
    rng = np.random.default_rng(6)
    for _ in range(10):
        wl = prim_to_cons(np.array([rng.uniform(0.2, 3), rng.uniform(-2, 2),
                                    rng.uniform(-2, 2), rng.uniform(0.2, 5)]),
                          gas)
        wr = prim_to_cons(np.array([rng.uniform(0.2, 3), rng.uniform(-2, 2),
                                    rng.uniform(-2, 2), rng.uniform(0.2, 5)]),
                          gas)
        assert np.allclose(lf_flux(wl, wr, gas), _reference(wl, wr, gas),
                           rtol=1e-13, atol=1e-13)


def test_dissipation_dampens_density_jump(gas):
    wl = prim_to_cons(np.array([1.0, 0.0, 0.0, 1.0]), gas)
    wr = prim_to_cons(np.array([2.0, 0.0, 0.0, 1.0]), gas)
    F = lf_flux(wl, wr, gas)
    assert F[0] < 0.0  # pure dissipation pushes mass toward the low side


def test_rejects_nonpositive_state(gas):
    w = prim_to_cons(np.array([1.0, 0.0, 0.0, 1.0]), gas)
    bad = w.copy()
    bad[3] = 0.01  # kinetic-only energy, negative pressure
    bad[1] = 1.0
    with pytest.raises(StateInvalid):
        lf_flux(w, bad, gas)


def test_patch_contraction_matches_pointwise(gas):
    rng = np.random.default_rng(14)
    nJ, nK, ng = 3, 4, 2
    q = rng.uniform(0.5, 2.0, (nJ, nK, ng, 4))
    q[..., 1:3] -= 1.2
    wl = prim_to_cons(q, gas)
    q2 = q + rng.uniform(-0.05, 0.05, q.shape)
    wr = prim_to_cons(q2, gas)
    eta = np.array([0.5, 0.5])
    F = lf_flux_patch(wl, wr, eta, gas)
    assert F.shape == (nJ, nK, 4)
    expect = np.zeros(4)
    for g in range(ng):
        expect += eta[g] * lf_flux(wl[1, 2, g], wr[1, 2, g], gas)
    assert np.allclose(F[1, 2], expect, atol=1e-13)


def test_patch_raises_on_bad_gauss_state(gas):
    wl = np.ones((1, 1, 1, 4))
    wl[..., 3] = 2.5
    wr = wl.copy()
    wr[0, 0, 0] = (1.0, 1.5, 0.0, 0.5)  # negative pressure state
    with pytest.raises(StateInvalid):
        lf_flux_patch(wl, wr, np.array([1.0]), gas)
