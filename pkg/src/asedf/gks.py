"""Gas-kinetic (BGK) interface flux with analytic time integration.

The interface distribution combines an equilibrium part built from the
half-moment merge of the two reconstructed states and two nonequilibrium
parts that decay on the numerical collision time.  Integrating the
transport solution over a window [0, delta] gives

    I(delta) = rho_c [ q0 <u psi>_c + q1 <u (a.u) psi>_c + q2 <u A psi>_c ]
             + rho_l [ E1 <u psi>_l - (tau E1 + E2) <u (a.u) psi>_l
                       - tau E1 <u A psi>_l ]_{u>0}
             + (same for the right state over u<0)

with E1 = taun (1 - e), E2 = taun^2 (1 - e) - taun delta e, e =
exp(-delta/taun), q0 = delta - E1, q1 = E2 + tau E1 - tau delta and
q2 = delta^2/2 - tau delta + tau E1.  Two windows (delta = dt/2 and dt)
then yield the instantaneous flux and its time derivative:

    F  = (4 I(dt/2) - I(dt)) / dt
    dF = 4 (I(dt) - 2 I(dt/2)) / dt^2

which is what the two-stage fourth-order march consumes.  taun -> 0
recovers a pure smooth-equilibrium flux (no kinetic dissipation), the
mode used by the accuracy studies.
"""
from __future__ import annotations

import math

import numba as nb
import numpy as np

from .moments import NMOM, _full_into, _half_into, _psi, _slope, _xi_pair
from .state import GasModel, StateInvalid

__all__ = [
    "micro_slope",
    "moment_matrix",
    "equilibrium_merge",
    "collision_time",
    "gks_time_integrated_flux",
    "gks_flux_point",
    "gks_flux_patch",
]


@nb.njit(cache=True)
def _micro_slope_s(U, V, lam, K, b1, b2, b3, b4):
    """Solve <(a.psi) psi> = b for a; b is grad(W)/rho."""
    ip = (K + 2.0) / (2.0 * lam)
    R2 = b2 - U * b1
    R3 = b3 - V * b1
    R4 = 2.0 * b4 - (U * U + V * V + ip) * b1
    a4 = 4.0 * lam * lam / (K + 2.0) * (R4 - 2.0 * U * R2 - 2.0 * V * R3)
    a3 = 2.0 * lam * R3 - V * a4
    a2 = 2.0 * lam * R2 - U * a4
    a1 = b1 - U * a2 - V * a3 - 0.5 * a4 * (U * U + V * V + ip)
    return a1, a2, a3, a4


@nb.njit(cache=True)
def _collision_time_s(pl, pr, pc, dt, c1, c2, mu, viscous):
    jump = abs(pl - pr) / (pl + pr)
    if viscous:
        tau = mu / pc
        taun = tau + c2 * jump * dt
    else:
        taun = c1 * dt + c2 * jump * dt
        tau = taun
    return tau, taun


@nb.njit(cache=True)
def _window_coeffs(delta, tau, taun):
    if taun > 0.0:
        e = math.exp(-delta / taun)
        E1 = taun * (1.0 - e)
        E2 = taun * taun * (1.0 - e) - taun * delta * e
    else:
        E1 = 0.0
        E2 = 0.0
    q0 = delta - E1
    q1 = E2 + tau * E1 - tau * delta
    q2 = 0.5 * delta * delta - tau * delta + tau * E1
    return E1, E2, q0, q1, q2


@nb.njit(cache=True)
def _gks_prep(wl0, wl1, wl2, wl3, wr0, wr1, wr2, wr3,
              sxl0, sxl1, sxl2, sxl3, sxr0, sxr1, sxr2, sxr3,
              syl0, syl1, syl2, syl3, syr0, syr1, syr2, syr3,
              gamma, K, mom):
    """Side states, moment tables (into mom) and expansion coefficients.

    Returns (pl, pr, pc, rl, rr, rc, xi, axl, ayl, Al, axr, ayr, Ar,
    axc, ayc, Ac, err); xi packs the three (xi2, xi4) pairs.
    """
    zero4 = (0.0, 0.0, 0.0, 0.0)
    zero6 = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
    rl = wl0
    rr = wr0
    if rl <= 0.0 or rr <= 0.0:
        return (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, zero6,
                zero4, zero4, zero4, zero4, zero4, zero4, zero4, zero4, zero4, 1)
    Ul = wl1 / rl
    Vl = wl2 / rl
    pl = (gamma - 1.0) * (wl3 - 0.5 * rl * (Ul * Ul + Vl * Vl))
    Ur = wr1 / rr
    Vr = wr2 / rr
    pr = (gamma - 1.0) * (wr3 - 0.5 * rr * (Ur * Ur + Vr * Vr))
    if pl <= 0.0 or pr <= 0.0:
        return (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, zero6,
                zero4, zero4, zero4, zero4, zero4, zero4, zero4, zero4, zero4, 1)
    laml = rl / (2.0 * pl)
    lamr = rr / (2.0 * pr)

    Mul_h = mom[0]
    Mur_h = mom[1]
    Mul = mom[2]
    Mur = mom[3]
    Mvl = mom[4]
    Mvr = mom[5]
    Muc = mom[6]
    Mvc = mom[7]
    _half_into(Ul, laml, 1, Mul_h)
    _half_into(Ur, lamr, -1, Mur_h)
    _full_into(Ul, laml, Mul)
    _full_into(Ur, lamr, Mur)
    _full_into(Vl, laml, Mvl)
    _full_into(Vr, lamr, Mvr)
    x2l, x4l = _xi_pair(laml, K)
    x2r, x4r = _xi_pair(lamr, K)

    axl = _micro_slope_s(Ul, Vl, laml, K, sxl0 / rl, sxl1 / rl, sxl2 / rl, sxl3 / rl)
    ayl = _micro_slope_s(Ul, Vl, laml, K, syl0 / rl, syl1 / rl, syl2 / rl, syl3 / rl)
    axr = _micro_slope_s(Ur, Vr, lamr, K, sxr0 / rr, sxr1 / rr, sxr2 / rr, sxr3 / rr)
    ayr = _micro_slope_s(Ur, Vr, lamr, K, syr0 / rr, syr1 / rr, syr2 / rr, syr3 / rr)

    # time-derivative coefficients from moment compatibility
    bx0, bx1, bx2, bx3 = _slope(Mul, Mvl, x2l, x4l, axl[0], axl[1], axl[2], axl[3], 1, 0)
    by0, by1, by2, by3 = _slope(Mul, Mvl, x2l, x4l, ayl[0], ayl[1], ayl[2], ayl[3], 0, 1)
    Al = _micro_slope_s(Ul, Vl, laml, K, -(bx0 + by0), -(bx1 + by1), -(bx2 + by2), -(bx3 + by3))
    bx0, bx1, bx2, bx3 = _slope(Mur, Mvr, x2r, x4r, axr[0], axr[1], axr[2], axr[3], 1, 0)
    by0, by1, by2, by3 = _slope(Mur, Mvr, x2r, x4r, ayr[0], ayr[1], ayr[2], ayr[3], 0, 1)
    Ar = _micro_slope_s(Ur, Vr, lamr, K, -(bx0 + by0), -(bx1 + by1), -(bx2 + by2), -(bx3 + by3))

    # merged equilibrium state and its slopes from half-space moments
    h0, h1, h2, h3 = _psi(Mul_h, Mvl, x2l, 0, 0)
    g0, g1, g2, g3 = _psi(Mur_h, Mvr, x2r, 0, 0)
    wc0 = rl * h0 + rr * g0
    wc1 = rl * h1 + rr * g1
    wc2 = rl * h2 + rr * g2
    wc3 = rl * h3 + rr * g3
    rc = wc0
    Uc = wc1 / rc
    Vc = wc2 / rc
    pc = (gamma - 1.0) * (wc3 - 0.5 * rc * (Uc * Uc + Vc * Vc))
    if rc <= 0.0 or pc <= 0.0:
        return (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, zero6,
                zero4, zero4, zero4, zero4, zero4, zero4, zero4, zero4, zero4, 2)
    lamc = rc / (2.0 * pc)
    _full_into(Uc, lamc, Muc)
    _full_into(Vc, lamc, Mvc)
    x2c, x4c = _xi_pair(lamc, K)

    h0, h1, h2, h3 = _slope(Mul_h, Mvl, x2l, x4l, axl[0], axl[1], axl[2], axl[3], 0, 0)
    g0, g1, g2, g3 = _slope(Mur_h, Mvr, x2r, x4r, axr[0], axr[1], axr[2], axr[3], 0, 0)
    axc = _micro_slope_s(Uc, Vc, lamc, K,
                         (rl * h0 + rr * g0) / rc, (rl * h1 + rr * g1) / rc,
                         (rl * h2 + rr * g2) / rc, (rl * h3 + rr * g3) / rc)
    h0, h1, h2, h3 = _slope(Mul_h, Mvl, x2l, x4l, ayl[0], ayl[1], ayl[2], ayl[3], 0, 0)
    g0, g1, g2, g3 = _slope(Mur_h, Mvr, x2r, x4r, ayr[0], ayr[1], ayr[2], ayr[3], 0, 0)
    ayc = _micro_slope_s(Uc, Vc, lamc, K,
                         (rl * h0 + rr * g0) / rc, (rl * h1 + rr * g1) / rc,
                         (rl * h2 + rr * g2) / rc, (rl * h3 + rr * g3) / rc)
    bx0, bx1, bx2, bx3 = _slope(Muc, Mvc, x2c, x4c, axc[0], axc[1], axc[2], axc[3], 1, 0)
    by0, by1, by2, by3 = _slope(Muc, Mvc, x2c, x4c, ayc[0], ayc[1], ayc[2], ayc[3], 0, 1)
    Ac = _micro_slope_s(Uc, Vc, lamc, K, -(bx0 + by0), -(bx1 + by1), -(bx2 + by2), -(bx3 + by3))

    xi = (x2l, x4l, x2r, x4r, x2c, x4c)
    return pl, pr, pc, rl, rr, rc, xi, axl, ayl, Al, axr, ayr, Ar, axc, ayc, Ac, 0


@nb.njit(cache=True)
def _window_sum(delta, tau, taun, rl, rr, rc,
                Mul_h, Mur_h, Mvl, Mvr, Muc, Mvc, xi,
                axl, ayl, Al, axr, ayr, Ar, axc, ayc, Ac):
    """One time-window integral of u psi f; returns a 4-tuple."""
    x2l, x4l, x2r, x4r, x2c, x4c = xi
    E1, E2, q0, q1, q2 = _window_coeffs(delta, tau, taun)
    cneq = -(tau * E1 + E2)

    e0, e1, e2, e3 = _psi(Muc, Mvc, x2c, 1, 0)
    sx0, sx1, sx2, sx3 = _slope(Muc, Mvc, x2c, x4c, axc[0], axc[1], axc[2], axc[3], 2, 0)
    sy0, sy1, sy2, sy3 = _slope(Muc, Mvc, x2c, x4c, ayc[0], ayc[1], ayc[2], ayc[3], 1, 1)
    sa0, sa1, sa2, sa3 = _slope(Muc, Mvc, x2c, x4c, Ac[0], Ac[1], Ac[2], Ac[3], 1, 0)
    F0 = rc * (q0 * e0 + q1 * (sx0 + sy0) + q2 * sa0)
    F1 = rc * (q0 * e1 + q1 * (sx1 + sy1) + q2 * sa1)
    F2 = rc * (q0 * e2 + q1 * (sx2 + sy2) + q2 * sa2)
    F3 = rc * (q0 * e3 + q1 * (sx3 + sy3) + q2 * sa3)

    e0, e1, e2, e3 = _psi(Mul_h, Mvl, x2l, 1, 0)
    sx0, sx1, sx2, sx3 = _slope(Mul_h, Mvl, x2l, x4l, axl[0], axl[1], axl[2], axl[3], 2, 0)
    sy0, sy1, sy2, sy3 = _slope(Mul_h, Mvl, x2l, x4l, ayl[0], ayl[1], ayl[2], ayl[3], 1, 1)
    sa0, sa1, sa2, sa3 = _slope(Mul_h, Mvl, x2l, x4l, Al[0], Al[1], Al[2], Al[3], 1, 0)
    F0 += rl * (E1 * e0 + cneq * (sx0 + sy0) - tau * E1 * sa0)
    F1 += rl * (E1 * e1 + cneq * (sx1 + sy1) - tau * E1 * sa1)
    F2 += rl * (E1 * e2 + cneq * (sx2 + sy2) - tau * E1 * sa2)
    F3 += rl * (E1 * e3 + cneq * (sx3 + sy3) - tau * E1 * sa3)

    e0, e1, e2, e3 = _psi(Mur_h, Mvr, x2r, 1, 0)
    sx0, sx1, sx2, sx3 = _slope(Mur_h, Mvr, x2r, x4r, axr[0], axr[1], axr[2], axr[3], 2, 0)
    sy0, sy1, sy2, sy3 = _slope(Mur_h, Mvr, x2r, x4r, ayr[0], ayr[1], ayr[2], ayr[3], 1, 1)
    sa0, sa1, sa2, sa3 = _slope(Mur_h, Mvr, x2r, x4r, Ar[0], Ar[1], Ar[2], Ar[3], 1, 0)
    F0 += rr * (E1 * e0 + cneq * (sx0 + sy0) - tau * E1 * sa0)
    F1 += rr * (E1 * e1 + cneq * (sx1 + sy1) - tau * E1 * sa1)
    F2 += rr * (E1 * e2 + cneq * (sx2 + sy2) - tau * E1 * sa2)
    F3 += rr * (E1 * e3 + cneq * (sx3 + sy3) - tau * E1 * sa3)
    return F0, F1, F2, F3


@nb.njit(cache=True)
def _gks_point(wl0, wl1, wl2, wl3, wr0, wr1, wr2, wr3,
               sxl0, sxl1, sxl2, sxl3, sxr0, sxr1, sxr2, sxr3,
               syl0, syl1, syl2, syl3, syr0, syr1, syr2, syr3,
               dt, gamma, K, c1, c2, mu, viscous, mom):
    """Flux and flux time derivative at one quadrature point.

    mom is an (8, NMOM) scratch block for the moment tables.  Returns
    (F0..F3, Ft0..Ft3, err) with err nonzero on a nonpositive state.
    """
    pl, pr, pc, rl, rr, rc, xi, axl, ayl, Al, axr, ayr, Ar, axc, ayc, Ac, err = \
        _gks_prep(wl0, wl1, wl2, wl3, wr0, wr1, wr2, wr3,
                  sxl0, sxl1, sxl2, sxl3, sxr0, sxr1, sxr2, sxr3,
                  syl0, syl1, syl2, syl3, syr0, syr1, syr2, syr3,
                  gamma, K, mom)
    if err != 0:
        return 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, err
    tau, taun = _collision_time_s(pl, pr, pc, dt, c1, c2, mu, viscous)

    I10, I11, I12, I13 = _window_sum(0.5 * dt, tau, taun, rl, rr, rc,
                                     mom[0], mom[1], mom[4], mom[5], mom[6], mom[7],
                                     xi, axl, ayl, Al, axr, ayr, Ar, axc, ayc, Ac)
    I20, I21, I22, I23 = _window_sum(dt, tau, taun, rl, rr, rc,
                                     mom[0], mom[1], mom[4], mom[5], mom[6], mom[7],
                                     xi, axl, ayl, Al, axr, ayr, Ar, axc, ayc, Ac)
    F0 = (4.0 * I10 - I20) / dt
    F1 = (4.0 * I11 - I21) / dt
    F2 = (4.0 * I12 - I22) / dt
    F3 = (4.0 * I13 - I23) / dt
    s = 4.0 / (dt * dt)
    Ft0 = s * (I20 - 2.0 * I10)
    Ft1 = s * (I21 - 2.0 * I11)
    Ft2 = s * (I22 - 2.0 * I12)
    Ft3 = s * (I23 - 2.0 * I13)
    return F0, F1, F2, F3, Ft0, Ft1, Ft2, Ft3, 0


@nb.njit(cache=True)
def _gks_window_point(wl0, wl1, wl2, wl3, wr0, wr1, wr2, wr3,
                      sxl0, sxl1, sxl2, sxl3, sxr0, sxr1, sxr2, sxr3,
                      syl0, syl1, syl2, syl3, syr0, syr1, syr2, syr3,
                      delta, tau, taun, gamma, K, mom):
    """I(delta) with explicit relaxation times; test hook."""
    pl, pr, pc, rl, rr, rc, xi, axl, ayl, Al, axr, ayr, Ar, axc, ayc, Ac, err = \
        _gks_prep(wl0, wl1, wl2, wl3, wr0, wr1, wr2, wr3,
                  sxl0, sxl1, sxl2, sxl3, sxr0, sxr1, sxr2, sxr3,
                  syl0, syl1, syl2, syl3, syr0, syr1, syr2, syr3,
                  gamma, K, mom)
    if err != 0:
        return 0.0, 0.0, 0.0, 0.0, err
    I0, I1, I2, I3 = _window_sum(delta, tau, taun, rl, rr, rc,
                                 mom[0], mom[1], mom[4], mom[5], mom[6], mom[7],
                                 xi, axl, ayl, Al, axr, ayr, Ar, axc, ayc, Ac)
    return I0, I1, I2, I3, 0


@nb.njit(cache=True)
def _gks_kernel(wl, wr, wxl, wxr, wyl, wyr, eta, dt, gamma, K, c1, c2, mu,
                viscous, F, Ft):
    nJ, nK, ng = wl.shape[0], wl.shape[1], wl.shape[2]
    mom = np.empty((8, NMOM))
    bad = 0
    for j in range(nJ):
        for k in range(nK):
            a0 = 0.0
            a1 = 0.0
            a2 = 0.0
            a3 = 0.0
            b0 = 0.0
            b1 = 0.0
            b2 = 0.0
            b3 = 0.0
            for q in range(ng):
                r = _gks_point(
                    wl[j, k, q, 0], wl[j, k, q, 1], wl[j, k, q, 2], wl[j, k, q, 3],
                    wr[j, k, q, 0], wr[j, k, q, 1], wr[j, k, q, 2], wr[j, k, q, 3],
                    wxl[j, k, q, 0], wxl[j, k, q, 1], wxl[j, k, q, 2], wxl[j, k, q, 3],
                    wxr[j, k, q, 0], wxr[j, k, q, 1], wxr[j, k, q, 2], wxr[j, k, q, 3],
                    wyl[j, k, q, 0], wyl[j, k, q, 1], wyl[j, k, q, 2], wyl[j, k, q, 3],
                    wyr[j, k, q, 0], wyr[j, k, q, 1], wyr[j, k, q, 2], wyr[j, k, q, 3],
                    dt, gamma, K, c1, c2, mu, viscous, mom)
                if r[8] != 0:
                    bad = r[8]
                w = eta[q]
                a0 += w * r[0]
                a1 += w * r[1]
                a2 += w * r[2]
                a3 += w * r[3]
                b0 += w * r[4]
                b1 += w * r[5]
                b2 += w * r[6]
                b3 += w * r[7]
            F[j, k, 0] = a0
            F[j, k, 1] = a1
            F[j, k, 2] = a2
            F[j, k, 3] = a3
            Ft[j, k, 0] = b0
            Ft[j, k, 1] = b1
            Ft[j, k, 2] = b2
            Ft[j, k, 3] = b3
    return bad


# ---------------------------------------------------------------------------
# python-facing wrappers

def micro_slope(U, V, lam, gas: GasModel, b) -> np.ndarray:
    """Expansion coefficients a with <(a.psi) psi> = b."""
    b = np.asarray(b, dtype=np.float64)
    return np.array(_micro_slope_s(float(U), float(V), float(lam), gas.K,
                                   b[0], b[1], b[2], b[3]))


def moment_matrix(U, V, lam, gas: GasModel) -> np.ndarray:
    """The 4x4 Maxwellian moment matrix M with M a = b (unit density)."""
    from .moments import slope_psi_moment
    M = np.empty((4, 4))
    for j in range(4):
        e = np.zeros(4)
        e[j] = 1.0
        M[:, j] = slope_psi_moment(U, V, lam, gas, e)
    return M


def equilibrium_merge(wl, wr, gas: GasModel) -> np.ndarray:
    """Merged equilibrium state from half-space moments of the two sides."""
    from .moments import psi_moment
    wl = np.asarray(wl, dtype=np.float64)
    wr = np.asarray(wr, dtype=np.float64)
    rl, Ul, Vl, pl = _prim4(wl, gas.gamma)
    rr, Ur, Vr, pr = _prim4(wr, gas.gamma)
    left = rl * psi_moment(Ul, Vl, rl / (2 * pl), gas, half=">0")
    right = rr * psi_moment(Ur, Vr, rr / (2 * pr), gas, half="<0")
    return left + right


def collision_time(pl, pr, p_eq, dt, c1, c2, mu=0.0, viscous=False):
    """(tau, tau_numerical) for the pressure-jump relaxation model."""
    return _collision_time_s(float(pl), float(pr), float(p_eq), float(dt),
                             float(c1), float(c2), float(mu), viscous)


def _prim4(w, gamma):
    rho = w[0]
    U = w[1] / rho
    V = w[2] / rho
    p = (gamma - 1.0) * (w[3] - 0.5 * rho * (U * U + V * V))
    if rho <= 0.0 or p <= 0.0:
        raise StateInvalid("nonpositive state in kinetic flux")
    return rho, U, V, p


def _as4(x):
    return np.asarray(x, dtype=np.float64).reshape(4)


def gks_time_integrated_flux(wl, wr, sxl, sxr, syl, syr, delta,
                             tau, taun, gas: GasModel) -> np.ndarray:
    """Window integral I(delta) with explicit relaxation times.

    Used directly by tests; the solver path evaluates two windows and
    extracts F and dF/dt instead.
    """
    mom = np.empty((8, NMOM))
    r = _gks_window_point(*_as4(wl), *_as4(wr), *_as4(sxl), *_as4(sxr),
                          *_as4(syl), *_as4(syr), float(delta), float(tau),
                          float(taun), gas.gamma, gas.K, mom)
    if r[4] != 0:
        raise StateInvalid("nonpositive state in kinetic flux")
    return np.array(r[0:4])


def gks_flux_point(wl, wr, sxl, sxr, syl, syr, dt, gas: GasModel,
                   c1, c2, mu=0.0, viscous=False):
    """(F, dF/dt) at a single quadrature point with the tau model applied."""
    mom = np.empty((8, NMOM))
    r = _gks_point(*_as4(wl), *_as4(wr), *_as4(sxl), *_as4(sxr), *_as4(syl),
                   *_as4(syr), float(dt), gas.gamma, gas.K, float(c1),
                   float(c2), float(mu), viscous, mom)
    if r[8] != 0:
        raise StateInvalid("nonpositive state in kinetic flux")
    return np.array(r[0:4]), np.array(r[4:8])


def gks_flux_patch(wl, wr, wxl, wxr, wyl, wyr, eta, dt, gas: GasModel,
                   c1, c2, mu=0.0, viscous=False):
    """Gauss-contracted interface fluxes and time derivatives.

    Returns (F, Ft) of shape (rows, n_iface, 4).

    Raises:
        StateInvalid: on any nonpositive reconstructed or merged state.
    """
    F = np.empty(wl.shape[:2] + (4,))
    Ft = np.empty_like(F)
    bad = _gks_kernel(wl, wr, wxl, wxr, wyl, wyr,
                      np.asarray(eta, dtype=np.float64), float(dt),
                      gas.gamma, gas.K, float(c1), float(c2), float(mu),
                      viscous, F, Ft)
    if bad:
        raise StateInvalid("nonpositive state in kinetic flux evaluation")
    return F, Ft
