"""Interface discontinuity strength and the stencil-extension factor.

The strength sigma at an interface combines the two-sided pressure jump
with the normal and tangential Mach-number jumps:

    sigma = |pl - pr|/pl + |pl - pr|/pr + (Man_l - Man_r)^2 + (Mat_l - Mat_r)^2

evaluated from the reconstructed one-sided states (cell averages during
bootstrap).  A stencil's extension factor compares the summed sigma over
its interior interfaces A against a threshold:

    alpha = 1          if A <  thres
    alpha = thres / A  otherwise

so alpha is continuous, lies in (0, 1], and decays like 1/A once the
stencil straddles strong jumps.
"""
from __future__ import annotations

import numba as nb
import numpy as np

from .mesh import GHOST, Field
from .state import GasModel

__all__ = [
    "SIGMA_THRES_DEFAULT",
    "sigma_point",
    "df_alpha",
    "averaged_sigma",
    "bootstrap_sigma",
]

SIGMA_THRES_DEFAULT = 2.0


@nb.njit(cache=True)
def _sigma_s(rl, Ul, Vl, pl, rr, Ur, Vr, pr, gamma):
    cl = np.sqrt(gamma * pl / rl)
    cr = np.sqrt(gamma * pr / rr)
    dp = abs(pl - pr)
    dman = Ul / cl - Ur / cr
    dmat = Vl / cl - Vr / cr
    return dp / pl + dp / pr + dman * dman + dmat * dmat


@nb.njit(cache=True)
def _sigma_cons_s(w0l, w1l, w2l, w3l, w0r, w1r, w2r, w3r, gamma):
    Ul = w1l / w0l
    Vl = w2l / w0l
    pl = (gamma - 1.0) * (w3l - 0.5 * w0l * (Ul * Ul + Vl * Vl))
    Ur = w1r / w0r
    Vr = w2r / w0r
    pr = (gamma - 1.0) * (w3r - 0.5 * w0r * (Ur * Ur + Vr * Vr))
    return _sigma_s(w0l, Ul, Vl, pl, w0r, Ur, Vr, pr, gamma)


def sigma_point(wl, wr, gas: GasModel):
    """Discontinuity strength between two conserved states.

    Accepts arrays with last axis 4; broadcasts elementwise.
    """
    wl = np.asarray(wl, dtype=np.float64)
    wr = np.asarray(wr, dtype=np.float64)
    g = gas.gamma
    Ul = wl[..., 1] / wl[..., 0]
    Vl = wl[..., 2] / wl[..., 0]
    pl = (g - 1.0) * (wl[..., 3] - 0.5 * wl[..., 0] * (Ul ** 2 + Vl ** 2))
    Ur = wr[..., 1] / wr[..., 0]
    Vr = wr[..., 2] / wr[..., 0]
    pr = (g - 1.0) * (wr[..., 3] - 0.5 * wr[..., 0] * (Ur ** 2 + Vr ** 2))
    cl = np.sqrt(g * pl / wl[..., 0])
    cr = np.sqrt(g * pr / wr[..., 0])
    dp = np.abs(pl - pr)
    return dp / pl + dp / pr + (Ul / cl - Ur / cr) ** 2 + (Vl / cl - Vr / cr) ** 2


@nb.njit(cache=True)
def df_alpha(a_sum, thres):
    if a_sum < thres:
        return 1.0
    return thres / a_sum


@nb.njit(cache=True)
def _bootstrap_axis0(w, sig, gamma):
    """sigma between axis-0 neighbours of w into sig[1:n]."""
    n0, n1 = w.shape[0], w.shape[1]
    for j in range(n1):
        for s in range(1, n0):
            sig[s, j] = _sigma_cons_s(
                w[s - 1, j, 0], w[s - 1, j, 1], w[s - 1, j, 2], w[s - 1, j, 3],
                w[s, j, 0], w[s, j, 1], w[s, j, 2], w[s, j, 3], gamma)


def averaged_sigma(field: Field, gas: GasModel):
    """Interface strength tables built from neighbouring cell averages.

    Returns freshly allocated (sigma_x, sigma_y) arrays shaped like the
    field's own tables (sigma_y is None in 1-D); every interface of the
    ghost-filled padded array is covered except the outermost per line,
    which no stencil ever consults.  This is the concurrent counterpart
    of the trace-based cache: it cannot see sub-cell jumps, but it has
    no lag.
    """
    sx = np.zeros_like(field.sigma_x)
    _bootstrap_axis0(field.w, sx, gas.gamma)
    sy = None
    if field.sigma_y is not None:
        wt = np.ascontiguousarray(field.w.transpose(1, 0, 2))
        st = np.zeros((field.sigma_y.shape[1], field.sigma_y.shape[0]))
        _bootstrap_axis0(wt, st, gas.gamma)
        sy = np.ascontiguousarray(st.T)
    return sx, sy


def bootstrap_sigma(field: Field, gas: GasModel) -> None:
    """Fill both sigma tables from cell averages (t=0, ghost-filled)."""
    sx, sy = averaged_sigma(field, gas)
    field.sigma_x[...] = sx
    if sy is not None:
        field.sigma_y[...] = sy
