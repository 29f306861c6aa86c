"""Global-speed-split (Lax-Friedrichs) interface flux.

A deliberately simple companion solver: first-order in its dissipation
model, it ignores the reconstructed slopes and pairs with the three-stage
strong-stability time integrator.  The dissipation speed is the larger
one-sided wave speed |U| + c at the interface.
"""
from __future__ import annotations

import numba as nb
import numpy as np

from .state import GasModel, StateInvalid

__all__ = ["lf_flux", "lf_flux_patch"]


@nb.njit(cache=True)
def _lf_s(al, bl, cl_, dl, ar, br, cr_, dr, gamma):
    """Scalar flux for conserved left/right states; normal along +x."""
    Ul = bl / al
    Vl = cl_ / al
    pl = (gamma - 1.0) * (dl - 0.5 * al * (Ul * Ul + Vl * Vl))
    Ur = br / ar
    Vr = cr_ / ar
    pr = (gamma - 1.0) * (dr - 0.5 * ar * (Ur * Ur + Vr * Vr))
    if al <= 0.0 or pl <= 0.0 or ar <= 0.0 or pr <= 0.0:
        return 0.0, 0.0, 0.0, 0.0, 1
    a = max(abs(Ul) + np.sqrt(gamma * pl / al), abs(Ur) + np.sqrt(gamma * pr / ar))
    f0 = 0.5 * (al * Ul + ar * Ur) - 0.5 * a * (ar - al)
    f1 = 0.5 * (al * Ul * Ul + pl + ar * Ur * Ur + pr) - 0.5 * a * (br - bl)
    f2 = 0.5 * (al * Ul * Vl + ar * Ur * Vr) - 0.5 * a * (cr_ - cl_)
    f3 = 0.5 * (Ul * (dl + pl) + Ur * (dr + pr)) - 0.5 * a * (dr - dl)
    return f0, f1, f2, f3, 0


@nb.njit(cache=True)
def _lf_kernel(wl, wr, eta, gamma, F):
    """Gauss-contracted interface fluxes; returns nonzero on a bad state."""
    nJ, nK, ng = wl.shape[0], wl.shape[1], wl.shape[2]
    bad = 0
    for j in range(nJ):
        for k in range(nK):
            a0 = 0.0
            a1 = 0.0
            a2 = 0.0
            a3 = 0.0
            for q in range(ng):
                f0, f1, f2, f3, err = _lf_s(
                    wl[j, k, q, 0], wl[j, k, q, 1], wl[j, k, q, 2], wl[j, k, q, 3],
                    wr[j, k, q, 0], wr[j, k, q, 1], wr[j, k, q, 2], wr[j, k, q, 3],
                    gamma)
                if err != 0:
                    bad = 1
                a0 += eta[q] * f0
                a1 += eta[q] * f1
                a2 += eta[q] * f2
                a3 += eta[q] * f3
            F[j, k, 0] = a0
            F[j, k, 1] = a1
            F[j, k, 2] = a2
            F[j, k, 3] = a3
    return bad


def lf_flux(wl, wr, gas: GasModel):
    """Vectorized single-point flux for library use and tests."""
    shape = np.asarray(wl).shape
    wl = np.atleast_2d(np.asarray(wl, dtype=np.float64))
    wr = np.atleast_2d(np.asarray(wr, dtype=np.float64))
    out = np.empty_like(wl)
    g = gas.gamma
    for i in range(wl.shape[0]):
        f0, f1, f2, f3, err = _lf_s(*wl[i], *wr[i], g)
        if err:
            raise StateInvalid("nonpositive state passed to lf_flux")
        out[i] = f0, f1, f2, f3
    return out.reshape(shape)


def lf_flux_patch(wl, wr, eta, gas: GasModel):
    """Contract Gauss-point states into interface fluxes.

    Args:
        wl, wr: (rows, n_iface, n_gauss, 4) one-sided states.
        eta: quadrature weights summing to one.

    Returns:
        (rows, n_iface, 4) flux array.

    Raises:
        StateInvalid: if any quadrature state has rho <= 0 or p <= 0.
    """
    F = np.empty(wl.shape[:2] + (4,))
    if _lf_kernel(wl, wr, np.asarray(eta, dtype=np.float64), gas.gamma, F):
        raise StateInvalid("nonpositive reconstructed state in lf_flux_patch")
    return F
