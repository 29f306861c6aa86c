"""Step-size control and the two explicit time integrators.

The integrators are written against plain callables so they can be
verified on scalar ODEs; the solver drives them with closures that
evaluate the spatial residual on the current field.
"""
from __future__ import annotations

import numpy as np

from .state import GasModel, cons_to_prim

__all__ = ["CFL_DEFAULT", "compute_dt", "ssp_rk3_step", "s2o4_step"]

CFL_DEFAULT = 0.5

# temporal order used in the accuracy cap dt <= dx^(r/s)
_TEMPORAL_ORDER = {"ssp-rk3": 3, "s2o4": 4}


def compute_dt(field, gas: GasModel, cfl: float, order: int,
               time_scheme: str = "s2o4", mu: float = 0.0,
               t_end: float | None = None, accuracy_cap: bool = False) -> float:
    """Admissible step: acoustic CFL, viscous limit, t_end clip.

    With accuracy_cap the extra bound dt <= dx^(order/s) keeps the
    temporal error of the s-order march below the spatial error on
    refinement studies; shock-dominated runs use the CFL bound alone.
    """
    try:
        s = _TEMPORAL_ORDER[time_scheme]
    except KeyError:
        raise ValueError(f"unknown time scheme {time_scheme!r}") from None
    # scan ghosts too: inflow boundaries can carry the fastest wave
    q = cons_to_prim(field.w, gas, check=False)
    rho = q[..., 0]
    c = np.sqrt(gas.gamma * q[..., 3] / rho)
    dt = cfl * field.mesh.dx / np.max(np.abs(q[..., 1]) + c)
    if field.mesh.ndim == 2:
        dt = min(dt, cfl * field.mesh.dy / np.max(np.abs(q[..., 2]) + c))
    if accuracy_cap:
        dt = min(dt, field.mesh.dx ** (order / s))
    if mu > 0.0:
        dmin = field.mesh.dx if field.mesh.ndim == 1 else min(field.mesh.dx, field.mesh.dy)
        rho_int = float(np.min(cons_to_prim(field.interior, gas)[..., 0]))
        dt = min(dt, 0.25 * dmin * dmin * rho_int / mu)
    if t_end is not None:
        remaining = t_end - field.time
        if remaining <= 0.0:
            return 0.0
        if dt > remaining:
            dt = remaining
    return float(dt)


def ssp_rk3_step(w, dt: float, rhs):
    """Three-stage third-order strong-stability-preserving step.

    rhs(w, t_off) -> dw/dt where t_off is the stage time offset from the
    step start (0, dt, dt/2).
    """
    w1 = w + dt * rhs(w, 0.0)
    w2 = 0.75 * w + 0.25 * (w1 + dt * rhs(w1, dt))
    return (w + 2.0 * (w2 + dt * rhs(w2, 0.5 * dt))) / 3.0


def s2o4_step(w, dt: float, rhs_pair):
    """Two-stage fourth-order step from residual plus residual rate.

    rhs_pair(w, t_off) -> (L, dL/dt).  The midpoint state uses
    w + dt/2 L + dt^2/8 dL/dt; the update combines the two rates as
    w + dt L0 + dt^2/6 (Lt0 + 2 Lt*).
    """
    L0, Lt0 = rhs_pair(w, 0.0)
    wm = w + 0.5 * dt * L0 + 0.125 * dt * dt * Lt0
    _, Ltm = rhs_pair(wm, 0.5 * dt)
    return w + dt * L0 + dt * dt / 6.0 * (Lt0 + 2.0 * Ltm)
