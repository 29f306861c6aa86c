"""Adaptive-stencil reconstruction with discontinuity feedback.

Every cell builds one polynomial per sweep direction.  The candidate
stencils grow bottom-up: the five-point core is judged by its extension
factor alpha (from the summed interface discontinuity strength); if alpha
is below one the cell falls back to the nonlinear (5,3) blend with
DF-scaled candidates, otherwise progressively wider stencils are accepted
while their own alpha stays at one, up to the configured maximum order.

A sweep produces line-averaged one-sided values and normal slopes at
every flux interface.  In 2-D a second, tangential application of the
same ladder turns those line averages into point values and tangential
slopes at the interface Gauss points; the tangential operator reuses the
weights computed from the value trace for the slope trace so both
payloads are filtered identically.

Array conventions inside kernels: W is (rows, cells-along-normal, 4),
sigma is (rows, interfaces) with interface s between cells s-1 and s.
"""
from __future__ import annotations

from dataclasses import dataclass

import numba as nb
import numpy as np

from .basis import ZMEAN_CONST, _DEDGE_LEFT, _EDGE_LEFT
from .feedback import _sigma_cons_s
from .indicators import (D_HI_DEFAULT, D_LO_DEFAULT, WEIGHT_EPS,
                         beta5_simplified, beta_quadratic, wenoz_weights)
from .mesh import GHOST, Field
from .state import GasModel
from .stencils import COEF_R3, COEF_R5, COEF_R7, COEF_R9

__all__ = [
    "SchemeConfig",
    "ReconstructionPatch",
    "ase_ladder",
    "reconstruct_direction",
    "update_sigmas",
    "gauss_nodes",
]


@dataclass(frozen=True)
class SchemeConfig:
    """Reconstruction/scheme parameters.

    max_order selects the top rung of the stencil ladder (5, 7 or 9);
    sigma_thres is the discontinuity-feedback threshold; d_hi and d_lo
    set the linear weight split of the (5,3) fallback.
    """

    max_order: int = 5
    sigma_thres: float = 2.0
    d_hi: float = D_HI_DEFAULT
    d_lo: float = D_LO_DEFAULT
    eps: float = WEIGHT_EPS

    def __post_init__(self):
        if self.max_order not in (5, 7, 9):
            raise ValueError("max_order must be 5, 7 or 9")
        if self.sigma_thres <= 0.0:
            raise ValueError("sigma_thres must be positive")

    def n_gauss(self, ndim: int) -> int:
        """Quadrature points per interface: (order-1)/2 in 2-D, 1 in 1-D."""
        return 1 if ndim == 1 else (self.max_order - 1) // 2


def gauss_nodes(ng: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes/weights on the reference cell [-1, 0].

    Weights are normalized to sum to one (line-average quadrature).
    """
    t, w = np.polynomial.legendre.leggauss(ng)
    return (t - 1.0) / 2.0, w / 2.0


@dataclass
class ReconstructionPatch:
    """One direction's reconstruction data at the flux interfaces.

    Line-level arrays have shape (rows, n_iface, 4); Gauss-level arrays
    have shape (interior rows, n_iface, n_gauss, 4).  In 1-D the Gauss
    arrays are views/trivial expansions of the line arrays.
    """

    axis: int
    vl: np.ndarray
    vr: np.ndarray
    sl: np.ndarray
    sr: np.ndarray
    wl: np.ndarray
    wr: np.ndarray
    wxl: np.ndarray
    wxr: np.ndarray
    wyl: np.ndarray
    wyr: np.ndarray
    df_count: int
    guard_count: int = 0


# ---------------------------------------------------------------------------
# kernels

@nb.njit(cache=True)
def _alpha(a_sum, thres):
    if a_sum < thres:
        return 1.0
    return thres / a_sum


@nb.njit(cache=True)
def _modal_into(Wr, a, c, tab, off_lo, nm, out):
    """Apply a coefficient table to the window around cell a, component c."""
    for m in range(nm):
        acc = 0.0
        for k in range(tab.shape[1]):
            acc += tab[m, k] * Wr[a + off_lo + k, c]
        out[m] = acc


@nb.njit(cache=True)
def _combine_df(m5, m3m, m3c, m3p, om, a5, a3m, a3c, a3p, d_hi, d_lo, cf, ci):
    """DF-scaled nonlinear blend into cf[ci, 0:4]."""
    d_side = (1.0 - d_hi) * (1.0 - d_lo) / 2.0
    d_cen = (1.0 - d_hi) * d_lo
    r = om[0] / d_hi
    sm0 = a3m * m3m[0]
    sm1 = a3m * m3m[1]
    sc0 = a3c * m3c[0]
    sc1 = a3c * m3c[1]
    sp0 = a3p * m3p[0]
    sp1 = a3p * m3p[1]
    cf[ci, 0] = (r * (a5 * m5[0] - d_side * sm0 - d_cen * sc0 - d_side * sp0)
                 + om[1] * sm0 + om[2] * sc0 + om[3] * sp0)
    cf[ci, 1] = (r * (a5 * m5[1] - d_side * sm1 - d_cen * sc1 - d_side * sp1)
                 + om[1] * sm1 + om[2] * sc1 + om[3] * sp1)
    cf[ci, 2] = r * a5 * m5[2]
    cf[ci, 3] = r * a5 * m5[3]


@nb.njit(cache=True)
def _sweep_normal(W, sig, g, n_int, dxn, max_order, thres, d_hi, d_lo, eps,
                  t_lo, t_hi, vl, vr, sl, sr):
    """Normal-direction pass over every row; returns the DF-limited count.

    Cells a = g-1 .. g+n_int are reconstructed so both sides of all
    n_int+1 flux interfaces get values; the count only covers interior
    cells of interior rows.
    """
    nT, nN = W.shape[0], W.shape[1]
    P = np.empty(nN + 2)
    cf = np.empty((4, 8))
    om = np.empty(4)
    m5 = np.empty(4)
    m3m = np.empty(2)
    m3c = np.empty(2)
    m3p = np.empty(2)
    count = 0
    for t in range(nT):
        P[0] = 0.0
        for s in range(nN + 1):
            P[s + 1] = P[s] + sig[t, s]
        for a in range(g - 1, g + n_int + 1):
            A5 = P[a + 3] - P[a - 1]
            if A5 >= thres:
                # five-point core is DF-limited: nonlinear (5,3) blend
                if t_lo <= t < t_hi and g <= a < g + n_int:
                    count += 1
                nm = 4
                a5 = thres / A5
                a3m = _alpha(P[a + 1] - P[a - 1], thres)
                a3c = _alpha(P[a + 2] - P[a], thres)
                a3p = _alpha(P[a + 3] - P[a + 1], thres)
                for c in range(4):
                    _modal_into(W[t], a, c, COEF_R5, -2, 4, m5)
                    _modal_into(W[t], a, c, COEF_R3[0], -2, 2, m3m)
                    _modal_into(W[t], a, c, COEF_R3[1], -1, 2, m3c)
                    _modal_into(W[t], a, c, COEF_R3[2], 0, 2, m3p)
                    bm = beta_quadratic(m3m[0], m3m[1])
                    bc = beta_quadratic(m3c[0], m3c[1])
                    bp = beta_quadratic(m3p[0], m3p[1])
                    b5 = beta5_simplified(bm, bc, bp)
                    wenoz_weights(b5, bm, bc, bp, d_hi, d_lo, eps, om)
                    _combine_df(m5, m3m, m3c, m3p, om, a5, a3m, a3c, a3p,
                                d_hi, d_lo, cf, c)
            else:
                # climb while the widened stencil stays clean
                level = 5
                if max_order >= 7 and (P[a + 4] - P[a - 2]) < thres:
                    level = 7
                    if max_order >= 9 and (P[a + 5] - P[a - 3]) < thres:
                        level = 9
                if level == 5:
                    nm = 4
                    for c in range(4):
                        _modal_into(W[t], a, c, COEF_R5, -2, 4, m5)
                        cf[c, 0] = m5[0]
                        cf[c, 1] = m5[1]
                        cf[c, 2] = m5[2]
                        cf[c, 3] = m5[3]
                elif level == 7:
                    nm = 6
                    for c in range(4):
                        _modal_into(W[t], a, c, COEF_R7, -3, 6, cf[c])
                else:
                    nm = 8
                    for c in range(4):
                        _modal_into(W[t], a, c, COEF_R9, -4, 8, cf[c])
            kr = a + 1 - g
            kl = a - g
            for c in range(4):
                w0 = W[t, a, c]
                if kr <= n_int:
                    v = w0
                    for n in range(nm):
                        v += cf[c, n] * ZMEAN_CONST[n]
                    vl[t, kr, c] = v
                    sl[t, kr, c] = cf[c, 0] / dxn
                if kl >= 0:
                    v = w0
                    d = 0.0
                    for n in range(nm):
                        v += cf[c, n] * _EDGE_LEFT[n]
                        d += cf[c, n] * _DEDGE_LEFT[n]
                    vr[t, kl, c] = v
                    sr[t, kl, c] = d / dxn
    return count


@nb.njit(cache=True)
def _sweep_tangential(vals, slopes, sigt, g_t, n_j, dtan, max_order, thres,
                      d_hi, d_lo, eps, zg, out_v, out_dt, out_s):
    """Along-interface pass turning line averages into Gauss-point data.

    vals/slopes: (rows, n_iface, 4) line traces from the normal pass for
    one side; sigt: (n_iface, rows+1) tangential sigma of the parent cell
    column; outputs are (n_j, n_iface, ng, 4).  The ladder and nonlinear
    weights come from the value trace and are applied to both payloads.
    """
    nT = vals.shape[0]
    nK = vals.shape[1]
    ng = zg.shape[0]
    P = np.empty(nT + 2)
    cfv = np.empty((4, 8))
    cfs = np.empty((4, 8))
    om = np.empty(4)
    m5 = np.empty(4)
    m3m = np.empty(2)
    m3c = np.empty(2)
    m3p = np.empty(2)
    s5 = np.empty(4)
    s3m = np.empty(2)
    s3c = np.empty(2)
    s3p = np.empty(2)
    for k in range(nK):
        P[0] = 0.0
        for s in range(nT + 1):
            P[s + 1] = P[s] + sigt[k, s]
        for j in range(n_j):
            a = g_t + j
            A5 = P[a + 3] - P[a - 1]
            if A5 >= thres:
                nm = 4
                a5 = thres / A5
                a3m = _alpha(P[a + 1] - P[a - 1], thres)
                a3c = _alpha(P[a + 2] - P[a], thres)
                a3p = _alpha(P[a + 3] - P[a + 1], thres)
                for c in range(4):
                    _modal_into(vals[:, k], a, c, COEF_R5, -2, 4, m5)
                    _modal_into(vals[:, k], a, c, COEF_R3[0], -2, 2, m3m)
                    _modal_into(vals[:, k], a, c, COEF_R3[1], -1, 2, m3c)
                    _modal_into(vals[:, k], a, c, COEF_R3[2], 0, 2, m3p)
                    bm = beta_quadratic(m3m[0], m3m[1])
                    bc = beta_quadratic(m3c[0], m3c[1])
                    bp = beta_quadratic(m3p[0], m3p[1])
                    b5 = beta5_simplified(bm, bc, bp)
                    wenoz_weights(b5, bm, bc, bp, d_hi, d_lo, eps, om)
                    _combine_df(m5, m3m, m3c, m3p, om, a5, a3m, a3c, a3p,
                                d_hi, d_lo, cfv, c)
                    _modal_into(slopes[:, k], a, c, COEF_R5, -2, 4, s5)
                    _modal_into(slopes[:, k], a, c, COEF_R3[0], -2, 2, s3m)
                    _modal_into(slopes[:, k], a, c, COEF_R3[1], -1, 2, s3c)
                    _modal_into(slopes[:, k], a, c, COEF_R3[2], 0, 2, s3p)
                    _combine_df(s5, s3m, s3c, s3p, om, a5, a3m, a3c, a3p,
                                d_hi, d_lo, cfs, c)
            else:
                level = 5
                if max_order >= 7 and (P[a + 4] - P[a - 2]) < thres:
                    level = 7
                    if max_order >= 9 and (P[a + 5] - P[a - 3]) < thres:
                        level = 9
                if level == 5:
                    nm = 4
                    for c in range(4):
                        _modal_into(vals[:, k], a, c, COEF_R5, -2, 4, cfv[c])
                        _modal_into(slopes[:, k], a, c, COEF_R5, -2, 4, cfs[c])
                elif level == 7:
                    nm = 6
                    for c in range(4):
                        _modal_into(vals[:, k], a, c, COEF_R7, -3, 6, cfv[c])
                        _modal_into(slopes[:, k], a, c, COEF_R7, -3, 6, cfs[c])
                else:
                    nm = 8
                    for c in range(4):
                        _modal_into(vals[:, k], a, c, COEF_R9, -4, 8, cfv[c])
                        _modal_into(slopes[:, k], a, c, COEF_R9, -4, 8, cfs[c])
            for c in range(4):
                v0 = vals[a, k, c]
                s0 = slopes[a, k, c]
                for q in range(ng):
                    z = zg[q]
                    vv = v0
                    sv = s0
                    dv = 0.0
                    zp = 1.0
                    for n in range(nm):
                        dv += cfv[c, n] * (n + 1) * zp
                        zp *= z
                        vv += cfv[c, n] * (zp + ZMEAN_CONST[n])
                        sv += cfs[c, n] * (zp + ZMEAN_CONST[n])
                    out_v[j, k, q, c] = vv
                    out_dt[j, k, q, c] = dv / dtan
                    out_s[j, k, q, c] = sv


@nb.njit(cache=True)
def _positivity_guard(W, g, t_lo, gm1, wl, wr, wxl, wxr, wyl, wyr):
    """First-order fallback for invalid one-sided Gauss states.

    The activity tables lag the payload by one stage, so a disturbance
    that spreads into a clean stencil window can momentarily produce a
    trace with nonpositive density or pressure.  Such a trace reverts to
    its parent cell average with zero slopes; the following sigma
    refresh then sees the full cell-average jump and the feedback
    reacts.  Returns the number of replaced points.
    """
    nJ, nK, ng = wl.shape[0], wl.shape[1], wl.shape[2]
    count = 0
    for j in range(nJ):
        t = t_lo + j
        for k in range(nK):
            for q in range(ng):
                for side in range(2):
                    if side == 0:
                        arr = wl
                        sx = wxl
                        sy = wyl
                        a = g + k - 1
                    else:
                        arr = wr
                        sx = wxr
                        sy = wyr
                        a = g + k
                    r = arr[j, k, q, 0]
                    mu = arr[j, k, q, 1]
                    mv = arr[j, k, q, 2]
                    E = arr[j, k, q, 3]
                    ok = r > 1e-12
                    if ok:
                        p = gm1 * (E - 0.5 * (mu * mu + mv * mv) / r)
                        ok = p > 1e-12
                    if not ok:
                        for c in range(4):
                            arr[j, k, q, c] = W[t, a, c]
                            sx[j, k, q, c] = 0.0
                            sy[j, k, q, c] = 0.0
                        count += 1
    return count


@nb.njit(cache=True)
def _sigma_from_gauss(wl, wr, gamma, out):
    """Interface sigma as the Gauss-point mean of the pointwise strength."""
    nJ, nK, ng = wl.shape[0], wl.shape[1], wl.shape[2]
    for j in range(nJ):
        for k in range(nK):
            acc = 0.0
            for q in range(ng):
                acc += _sigma_cons_s(
                    wl[j, k, q, 0], wl[j, k, q, 1], wl[j, k, q, 2], wl[j, k, q, 3],
                    wr[j, k, q, 0], wr[j, k, q, 1], wr[j, k, q, 2], wr[j, k, q, 3],
                    gamma)
            out[j, k] = acc / ng


# ---------------------------------------------------------------------------
# wrappers

def ase_ladder(sig_window: np.ndarray, cfg: SchemeConfig):
    """Ladder decision for one cell from its sigma environment.

    Args:
        sig_window: the 8 interface strengths centred on the cell
            (interfaces at offsets -4..+4 excluding none); entry i is the
            interface between cell offsets i-4 and i-3.
        cfg: scheme configuration.

    Returns:
        (kind, level, alpha5) where kind is "df" or "linear"; level is
        the accepted linear order (meaningless for "df").
    """
    s = np.asarray(sig_window, dtype=np.float64)
    if s.shape != (8,):
        raise ValueError("sigma window must have 8 interface entries")
    A5 = s[2:6].sum()
    if A5 >= cfg.sigma_thres:
        return "df", 3, cfg.sigma_thres / A5
    level = 5
    if cfg.max_order >= 7 and s[1:7].sum() < cfg.sigma_thres:
        level = 7
        if cfg.max_order >= 9 and s.sum() < cfg.sigma_thres:
            level = 9
    return "linear", level, 1.0


def _sweep_buffers(field: Field, axis: int):
    """Contiguous (rows, normal, 4) state and sigma for one sweep axis."""
    if axis == 0:
        W = np.ascontiguousarray(field.w.transpose(1, 0, 2))
        sig = np.ascontiguousarray(field.sigma_x.T)
    else:
        W = field.w.copy()
        W[..., 1] = field.w[..., 2]
        W[..., 2] = -field.w[..., 1]
        sig = field.sigma_y
    return W, sig


def reconstruct_direction(field: Field, axis: int, cfg: SchemeConfig,
                          gas: GasModel) -> ReconstructionPatch:
    """Full reconstruction for one sweep direction.

    axis 0 sweeps x (normal = +x); axis 1 sweeps y, with states rotated
    into the sweep frame so the same kernels serve both.  For 2-D meshes
    the tangential pass fills the Gauss-point arrays; 1-D meshes expand
    the line arrays trivially.
    """
    mesh = field.mesh
    g = GHOST
    if axis == 1 and mesh.ndim == 1:
        raise ValueError("axis 1 sweep on a 1-D mesh")
    W, sig = _sweep_buffers(field, axis)
    nT = W.shape[0]
    if axis == 0:
        n_int, dxn = mesh.nx, mesh.dx
        t_lo, t_hi = mesh.gy, mesh.gy + mesh.ny_cells
        n_j = mesh.ny_cells
        g_t, dtan = mesh.gy, mesh.dy
    else:
        n_int, dxn = mesh.ny_cells, mesh.dy
        t_lo, t_hi = g, g + mesh.nx
        n_j = mesh.nx
        g_t, dtan = g, mesh.dx
    nK = n_int + 1
    vl = np.empty((nT, nK, 4))
    vr = np.empty((nT, nK, 4))
    sl = np.empty((nT, nK, 4))
    sr = np.empty((nT, nK, 4))
    df_count = _sweep_normal(W, sig, g, n_int, dxn,
                             cfg.max_order, cfg.sigma_thres, cfg.d_hi,
                             cfg.d_lo, cfg.eps, t_lo, t_hi, vl, vr, sl, sr)
    ng = cfg.n_gauss(mesh.ndim)
    if mesh.ndim == 1:
        wl = vl[t_lo:t_hi, :, None, :]
        wr = vr[t_lo:t_hi, :, None, :]
        wxl = sl[t_lo:t_hi, :, None, :]
        wxr = sr[t_lo:t_hi, :, None, :]
        wyl = np.zeros_like(wl)
        wyr = np.zeros_like(wr)
        guards = _positivity_guard(W, g, t_lo, gas.gamma - 1.0,
                                   wl, wr, wxl, wxr, wyl, wyr)
        return ReconstructionPatch(axis, vl, vr, sl, sr, wl, wr, wxl, wxr,
                                   wyl, wyr, df_count, guards)
    zg, _ = gauss_nodes(ng)
    if axis == 0:
        sig_t_l = np.ascontiguousarray(field.sigma_y[g - 1:g - 1 + nK])
        sig_t_r = np.ascontiguousarray(field.sigma_y[g:g + nK])
    else:
        gy = mesh.gy
        sig_t_l = np.ascontiguousarray(field.sigma_x.T[gy - 1:gy - 1 + nK])
        sig_t_r = np.ascontiguousarray(field.sigma_x.T[gy:gy + nK])
    shape = (n_j, nK, ng, 4)
    wl = np.empty(shape)
    wr = np.empty(shape)
    wxl = np.empty(shape)
    wxr = np.empty(shape)
    wyl = np.empty(shape)
    wyr = np.empty(shape)
    _sweep_tangential(vl, sl, sig_t_l, g_t, n_j, dtan, cfg.max_order,
                      cfg.sigma_thres, cfg.d_hi, cfg.d_lo, cfg.eps, zg,
                      wl, wyl, wxl)
    _sweep_tangential(vr, sr, sig_t_r, g_t, n_j, dtan, cfg.max_order,
                      cfg.sigma_thres, cfg.d_hi, cfg.d_lo, cfg.eps, zg,
                      wr, wyr, wxr)
    if axis == 1:
        # sweep frame is (x' = +y, y' = -x): tangential derivative flips
        np.negative(wyl, out=wyl)
        np.negative(wyr, out=wyr)
    guards = _positivity_guard(W, g, t_lo, gas.gamma - 1.0,
                               wl, wr, wxl, wxr, wyl, wyr)
    return ReconstructionPatch(axis, vl, vr, sl, sr, wl, wr, wxl, wxr,
                               wyl, wyr, df_count, guards)


def update_sigmas(field: Field, patch: ReconstructionPatch, gas: GasModel) -> None:
    """Refresh the sigma table of the patch direction at flux interfaces.

    The new strengths come from the Gauss-point means of the reconstructed
    one-sided states; ghost entries are refilled separately from the
    boundary policy.
    """
    mesh = field.mesh
    g = GHOST
    nJ, nK = patch.wl.shape[0], patch.wl.shape[1]
    out = np.empty((nJ, nK))
    _sigma_from_gauss(patch.wl, patch.wr, gas.gamma, out)
    if patch.axis == 0:
        field.sigma_x[g:g + nK, mesh.gy:mesh.gy + nJ] = out.T
    else:
        field.sigma_y[g:g + nJ, mesh.gy:mesh.gy + nK] = out
