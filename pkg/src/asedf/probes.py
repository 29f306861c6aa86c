"""Diagnostic probes on finished fields.

The vortex-height probe works on the wall-mounted recirculation bubble
of the viscous shock-tube flow: integrate the mass flux rho*u upward
from the no-slip bottom wall to get a streamfunction that is zero on
the wall, negative inside the reversed-flow bubble, and crosses zero on
the separating streamline.  The bubble height in a column is the
interpolated zero crossing of that column's streamfunction; the probe
reports the maximum over a window around the primary vortex and None
when no column holds reversed flow (no vortex to measure).
"""
from __future__ import annotations

import numpy as np

__all__ = ["mass_flux_streamfunction", "vortex_height"]


def mass_flux_streamfunction(field) -> np.ndarray:
    """Column integrals of rho*u from the bottom wall to each y face.

    Returns shape (nx, ny+1); entry [i, j] is the integral over the
    first j cells of column i.
    """
    mesh = field.mesh
    if mesh.ndim != 2:
        raise ValueError("streamfunction probe needs a 2-D field")
    rhou = field.interior[..., 1]
    psi = np.zeros((mesh.nx, mesh.ny + 1))
    np.cumsum(rhou * mesh.dy, axis=1, out=psi[:, 1:])
    return psi


def vortex_height(field, x_window=(0.55, 0.95)) -> float | None:
    """Height of the wall recirculation bubble inside x_window.

    Returns None when no reversed-flow bubble touches the wall in the
    window (probe reports absence rather than a spurious zero).
    """
    mesh = field.mesh
    psi = mass_flux_streamfunction(field)
    yf = mesh.y_faces()
    xc = mesh.x_centers()
    cols = np.nonzero((xc >= x_window[0]) & (xc <= x_window[1]))[0]
    best = None
    for i in cols:
        col = psi[i]
        if col[1] >= 0.0:
            continue
        j = 1
        while j < mesh.ny and col[j + 1] < 0.0:
            j += 1
        if j >= mesh.ny:
            h = yf[-1] - yf[0]
        else:
            # crossing between faces j and j+1
            a, b = col[j], col[j + 1]
            h = (yf[j] - yf[0]) + mesh.dy * a / (a - b)
        if best is None or h > best:
            best = h
    return best
