"""Time-marching driver coupling reconstruction, fluxes and boundary fill.

One residual evaluation is: ghost fill at the stage time, directional
reconstruction sweeps (both use the interface activity state from the
start of the stage), activity refresh from the new interface traces,
then flux assembly.  The activity tables therefore lag the payload by
one stage, which is what makes the feedback explicit and cheap.
"""
from __future__ import annotations

import time as _time
from dataclasses import dataclass, field as _dcfield

import numpy as np

from .feedback import averaged_sigma
from .flux_lf import lf_flux_patch
from .gks import gks_flux_patch
from .mesh import BoundarySpec, Field, fill_ghosts
from .reconstruct import (SchemeConfig, gauss_nodes, reconstruct_direction,
                          update_sigmas)
from .state import GasModel, StateInvalid, cons_to_prim
from .timestep import CFL_DEFAULT, compute_dt

__all__ = ["Solver", "SolverStats"]


@dataclass
class SolverStats:
    """Running counters for one advance() call."""
    steps: int = 0
    df_events: int = 0
    guard_events: int = 0
    fallback_events: int = 0
    min_rho: float = np.inf
    min_p: float = np.inf
    wall_time: float = 0.0
    dt_history: list = _dcfield(default_factory=list)

    def observe_state(self, w, gas: GasModel):
        q = cons_to_prim(w, gas, check=False)
        rmin = float(np.min(q[..., 0]))
        pmin = float(np.min(q[..., 3]))
        if rmin < self.min_rho:
            self.min_rho = rmin
        if pmin < self.min_p:
            self.min_p = pmin
        if rmin <= 0.0 or pmin <= 0.0:
            raise StateInvalid(
                f"nonpositive stage state: min rho {rmin:.3e}, min p {pmin:.3e}")


class Solver:
    """Explicit finite-volume driver on a single block.

    flux is "gks" or "lf"; the central flux carries a time derivative so
    it defaults to the two-stage fourth-order march, the dissipative one
    has no rate and must use the three-stage update.
    """

    def __init__(self, mesh, bc: BoundarySpec, gas: GasModel,
                 scheme: SchemeConfig, flux: str = "gks",
                 time_scheme: str | None = None, cfl: float = CFL_DEFAULT,
                 c1: float = 0.05, c2: float = 0.0, mu: float = 0.0,
                 viscous: bool = False, accuracy_cap: bool = False):
        if flux not in ("gks", "lf"):
            raise ValueError(f"unknown flux {flux!r}")
        if time_scheme is None:
            time_scheme = "s2o4" if flux == "gks" else "ssp-rk3"
        if time_scheme not in ("s2o4", "ssp-rk3"):
            raise ValueError(f"unknown time scheme {time_scheme!r}")
        if flux == "lf" and time_scheme == "s2o4":
            raise ValueError("the dissipative flux has no time derivative; "
                             "use ssp-rk3 with it")
        if viscous and flux != "gks":
            raise ValueError("viscous runs need the kinetic flux")
        self.mesh = mesh
        self.bc = bc
        self.gas = gas
        self.scheme = scheme
        self.flux = flux
        self.time_scheme = time_scheme
        self.cfl = cfl
        self.c1 = c1
        self.c2 = c2
        self.mu = mu
        self.viscous = viscous
        self.accuracy_cap = accuracy_cap
        ng = scheme.n_gauss(mesh.ndim)
        _, self.eta = gauss_nodes(ng)
        self.stats = SolverStats()

    # -- residual ---------------------------------------------------------

    def _flux_direction(self, patch, dt):
        if self.flux == "gks":
            return gks_flux_patch(patch.wl, patch.wr, patch.wxl, patch.wxr,
                                  patch.wyl, patch.wyr, self.eta, dt,
                                  self.gas, self.c1, self.c2, self.mu,
                                  self.viscous)
        return lf_flux_patch(patch.wl, patch.wr, self.eta, self.gas), None

    def residual(self, fld: Field, dt: float, t_off: float = 0.0):
        """(L, Lt, fluxes) on the interior; Lt is None for the dissipative flux.

        Ghosts are filled at the stage time, the cached activity is
        floored by the average-based strength of the current data (the
        trace cache is one pass old and misses fronts that formed during
        the previous stage), both sweeps run, then the tables are
        refreshed: interior interfaces from the new traces, everything
        else from the averages.

        fluxes lists one (axis, F, Ft) triple per sweep in mesh
        orientation: axis 0 arrays are (nx+1, ny, 4), axis 1 arrays
        (nx, ny+1, 4) with the sweep-frame momentum rotation undone, so
        L == -sum of their divided differences.  Ft is None for the
        dissipative flux.
        """
        mesh = self.mesh
        fill_ghosts(fld, self.bc, self.gas, t=fld.time + t_off)
        avg_x, avg_y = averaged_sigma(fld, self.gas)
        np.maximum(fld.sigma_x, avg_x, out=fld.sigma_x)
        if avg_y is not None:
            np.maximum(fld.sigma_y, avg_y, out=fld.sigma_y)
        patches = [reconstruct_direction(fld, 0, self.scheme, self.gas)]
        if mesh.ndim == 2:
            patches.append(reconstruct_direction(fld, 1, self.scheme, self.gas))
        fld.sigma_x[...] = avg_x
        if avg_y is not None:
            fld.sigma_y[...] = avg_y
        for p in patches:
            self.stats.df_events += p.df_count
            self.stats.guard_events += p.guard_count
            update_sigmas(fld, p, self.gas)

        nx, ny = mesh.nx, mesh.ny_cells
        L = np.zeros((nx, ny, 4))
        Lt = np.zeros((nx, ny, 4)) if self.flux == "gks" else None
        fluxes = []
        for p in patches:
            F, Ft = self._flux_direction(p, dt)
            if p.axis == 0:
                # sweep rows are y, interfaces along x
                Fo = np.ascontiguousarray(F.transpose(1, 0, 2))
                Fto = None if Ft is None else np.ascontiguousarray(Ft.transpose(1, 0, 2))
                L -= (Fo[1:] - Fo[:-1]) / mesh.dx
                if Lt is not None:
                    Lt -= (Fto[1:] - Fto[:-1]) / mesh.dx
            else:
                # undo the momentum rotation of the y sweep
                Fo = np.stack([F[..., 0], -F[..., 2], F[..., 1], F[..., 3]], axis=-1)
                Fto = None if Ft is None else np.stack(
                    [Ft[..., 0], -Ft[..., 2], Ft[..., 1], Ft[..., 3]], axis=-1)
                L -= (Fo[:, 1:] - Fo[:, :-1]) / mesh.dy
                if Lt is not None:
                    Lt -= (Fto[:, 1:] - Fto[:, :-1]) / mesh.dy
            fluxes.append((p.axis, Fo, Fto))
        return L, Lt, fluxes

    # -- stepping ---------------------------------------------------------

    def _positive(self, w):
        q = cons_to_prim(w, self.gas, check=False)
        return (q[..., 0] > 0.0) & (q[..., 3] > 0.0)

    def _s2o4_final(self, w0, dt, X0, Xm):
        """Full-step update in flux form with a local positivity fallback.

        The quadratic time term carries the flux rate of an emerging
        front into cells that the front has not physically reached; at
        near-vacuum states that alone can push the update nonpositive.
        Interfaces feeding a nonpositive cell drop their rate
        contribution (both neighbours see the same flux, so the repair
        stays exactly conservative) and the update is rebuilt.
        """
        mesh = self.mesh
        eff = []
        for (axis, F0, Ft0), (_, _, Ftm) in zip(X0, Xm):
            fe = F0 + dt / 6.0 * (Ft0 + 2.0 * Ftm)
            eff.append([axis, fe, F0, np.zeros(fe.shape[:-1], dtype=bool)])
        for _ in range(4):
            w1 = w0.copy()
            for axis, fe, _, _ in eff:
                if axis == 0:
                    w1 -= dt / mesh.dx * (fe[1:] - fe[:-1])
                else:
                    w1 -= dt / mesh.dy * (fe[:, 1:] - fe[:, :-1])
            bad = ~self._positive(w1)
            if not bad.any():
                return w1
            flipped = False
            for axis, fe, f0, used in eff:
                m = np.zeros_like(used)
                if axis == 0:
                    m[:-1] |= bad
                    m[1:] |= bad
                else:
                    m[:, :-1] |= bad
                    m[:, 1:] |= bad
                m &= ~used
                if m.any():
                    fe[m] = f0[m]
                    used |= m
                    flipped = True
                    self.stats.fallback_events += int(m.sum())
            if not flipped:
                break
        return w1

    def step(self, fld: Field, dt: float):
        """Advance the field one step of size dt in place."""
        w0 = fld.interior.copy()
        if self.time_scheme == "s2o4":
            L0, Lt0, X0 = self.residual(fld, dt, 0.0)
            wm = w0 + 0.5 * dt * L0 + 0.125 * dt * dt * Lt0
            bad = ~self._positive(wm)
            if bad.any():
                # midpoint state only feeds the next residual; a local
                # drop of its quadratic term costs nothing downstream
                self.stats.fallback_events += int(bad.sum())
                wm[bad] = w0[bad] + 0.5 * dt * L0[bad]
                still = ~self._positive(wm)
                if still.any():
                    wm[still] = w0[still]
            self.stats.observe_state(wm, self.gas)
            fld.set_interior(wm)
            _, _, Xm = self.residual(fld, dt, 0.5 * dt)
            w1 = self._s2o4_final(w0, dt, X0, Xm)
            self.stats.observe_state(w1, self.gas)
            fld.set_interior(w1)
        else:
            L, _, _ = self.residual(fld, dt, 0.0)
            w1 = w0 + dt * L
            self.stats.observe_state(w1, self.gas)
            fld.set_interior(w1)
            L, _, _ = self.residual(fld, dt, dt)
            w2 = 0.75 * w0 + 0.25 * (w1 + dt * L)
            self.stats.observe_state(w2, self.gas)
            fld.set_interior(w2)
            L, _, _ = self.residual(fld, dt, 0.5 * dt)
            w3 = (w0 + 2.0 * (w2 + dt * L)) / 3.0
            self.stats.observe_state(w3, self.gas)
            fld.set_interior(w3)
        fld.time += dt
        self.stats.steps += 1

    def advance(self, fld: Field, t_end: float, max_steps: int | None = None,
                callback=None) -> SolverStats:
        """March to t_end; returns the accumulated statistics."""
        tic = _time.perf_counter()
        while fld.time < t_end - 1e-14:
            dt = compute_dt(fld, self.gas, self.cfl, self.scheme.max_order,
                            self.time_scheme, self.mu, t_end,
                            accuracy_cap=self.accuracy_cap)
            if dt <= 0.0:
                break
            self.step(fld, dt)
            self.stats.dt_history.append(dt)
            if callback is not None:
                callback(fld, self.stats.steps, dt)
            if max_steps is not None and self.stats.steps >= max_steps:
                break
        self.stats.wall_time += _time.perf_counter() - tic
        return self.stats
