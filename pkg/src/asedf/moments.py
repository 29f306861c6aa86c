"""Maxwellian velocity moments for the kinetic flux.

All moments are per unit density.  The streaming direction uses full and
half-space moments <u^n> built from the erfc/exponential seed pair and a
two-term recursion; the transverse direction and the internal degrees of
freedom only ever need full moments.  psi denotes the collision-invariant
vector (1, u, v, (u^2 + v^2 + xi^2)/2).

The scalar helpers return tuples so the compiled flux kernel composes
them without temporary arrays.
"""
from __future__ import annotations

import math

import numba as nb
import numpy as np

from .state import GasModel

__all__ = ["NMOM", "velocity_moments", "psi_moment", "slope_psi_moment"]

#: number of one-directional moments carried: <u^0> .. <u^6>
NMOM = 7


@nb.njit(cache=True)
def _full_into(U, lam, out):
    out[0] = 1.0
    out[1] = U
    for n in range(NMOM - 2):
        out[n + 2] = U * out[n + 1] + (n + 1) / (2.0 * lam) * out[n]


@nb.njit(cache=True)
def _half_into(U, lam, sign, out):
    s = math.sqrt(lam)
    e = 0.5 * math.exp(-lam * U * U) / math.sqrt(math.pi * lam)
    if sign > 0:
        out[0] = 0.5 * math.erfc(-s * U)
        out[1] = U * out[0] + e
    else:
        out[0] = 0.5 * math.erfc(s * U)
        out[1] = U * out[0] - e
    for n in range(NMOM - 2):
        out[n + 2] = U * out[n + 1] + (n + 1) / (2.0 * lam) * out[n]


@nb.njit(cache=True)
def _xi_pair(lam, K):
    """(<xi^2>, <xi^4>) for K internal degrees of freedom."""
    x2 = K / (2.0 * lam)
    x4 = (K + 2.0) / (2.0 * lam) * x2
    return x2, x4


@nb.njit(cache=True)
def _psi(Mu, Mv, x2, a, b):
    """<u^a v^b psi> as four floats."""
    p0 = Mu[a] * Mv[b]
    p1 = Mu[a + 1] * Mv[b]
    p2 = Mu[a] * Mv[b + 1]
    p3 = 0.5 * (Mu[a + 2] * Mv[b] + Mu[a] * Mv[b + 2] + Mu[a] * Mv[b] * x2)
    return p0, p1, p2, p3


@nb.njit(cache=True)
def _psi_xi2(Mu, Mv, x2, x4, a, b):
    """<u^a v^b xi^2 psi>."""
    p0 = Mu[a] * Mv[b] * x2
    p1 = Mu[a + 1] * Mv[b] * x2
    p2 = Mu[a] * Mv[b + 1] * x2
    p3 = 0.5 * (Mu[a + 2] * Mv[b] * x2 + Mu[a] * Mv[b + 2] * x2 + Mu[a] * Mv[b] * x4)
    return p0, p1, p2, p3


@nb.njit(cache=True)
def _slope(Mu, Mv, x2, x4, a1, a2, a3, a4, a, b):
    """<u^a v^b (a.psi) psi> for micro-slope coefficients (a1..a4)."""
    t0, t1, t2, t3 = _psi(Mu, Mv, x2, a, b)
    u0, u1, u2, u3 = _psi(Mu, Mv, x2, a + 1, b)
    v0, v1, v2, v3 = _psi(Mu, Mv, x2, a, b + 1)
    w0, w1, w2, w3 = _psi(Mu, Mv, x2, a + 2, b)
    x0, x1, x2_, x3 = _psi(Mu, Mv, x2, a, b + 2)
    y0, y1, y2, y3 = _psi_xi2(Mu, Mv, x2, x4, a, b)
    r0 = a1 * t0 + a2 * u0 + a3 * v0 + 0.5 * a4 * (w0 + x0 + y0)
    r1 = a1 * t1 + a2 * u1 + a3 * v1 + 0.5 * a4 * (w1 + x1 + y1)
    r2 = a1 * t2 + a2 * u2 + a3 * v2 + 0.5 * a4 * (w2 + x2_ + y2)
    r3 = a1 * t3 + a2 * u3 + a3 * v3 + 0.5 * a4 * (w3 + x3 + y3)
    return r0, r1, r2, r3


# ---------------------------------------------------------------------------
# python-facing wrappers

def velocity_moments(U: float, lam: float, n: int = NMOM - 1,
                     half: str | None = None) -> np.ndarray:
    """Moments <u^0>..<u^n> of the normalized Maxwellian.

    Args:
        U: mean velocity.
        lam: rho / (2 p).
        n: highest power (<= 6).
        half: None for full moments, ">0" or "<0" for half-space moments.
    """
    if not 0 <= n < NMOM:
        raise ValueError(f"moment order {n} outside 0..{NMOM - 1}")
    out = np.empty(NMOM)
    if half is None:
        _full_into(U, lam, out)
    elif half == ">0":
        _half_into(U, lam, 1, out)
    elif half == "<0":
        _half_into(U, lam, -1, out)
    else:
        raise ValueError("half must be None, '>0' or '<0'")
    return out[:n + 1]


def psi_moment(U: float, V: float, lam: float, gas: GasModel,
               a: int = 0, b: int = 0, half: str | None = None) -> np.ndarray:
    """<u^a v^b psi> per unit density."""
    Mu = velocity_moments(U, lam, NMOM - 1, half)
    Mv = velocity_moments(V, lam, NMOM - 1, None)
    x2, _ = _xi_pair(lam, gas.K)
    return np.array(_psi(Mu, Mv, x2, a, b))


def slope_psi_moment(U: float, V: float, lam: float, gas: GasModel,
                     acoef, a: int = 0, b: int = 0,
                     half: str | None = None) -> np.ndarray:
    """<u^a v^b (a.psi) psi> for a micro-slope coefficient vector."""
    Mu = velocity_moments(U, lam, NMOM - 1, half)
    Mv = velocity_moments(V, lam, NMOM - 1, None)
    x2, x4 = _xi_pair(lam, gas.K)
    a1, a2, a3, a4 = (float(x) for x in acoef)
    return np.array(_slope(Mu, Mv, x2, x4, a1, a2, a3, a4, a, b))
