"""Conserved/primitive state handling for the 2-D compressible equations.

The solver carries conserved variables W = (rho, rho*U, rho*V, rho*E) per
cell.  One-dimensional problems use the same layout with rho*V = 0, so a
single set of conversion and flux routines serves both cases.  All
routines exist in two forms: scalar kernels compiled with numba (used
inside the sweep loops) and vectorized numpy wrappers for library users
and tests.
"""
from __future__ import annotations

from dataclasses import dataclass

import numba as nb
import numpy as np

__all__ = [
    "GasModel",
    "StateInvalid",
    "cons_to_prim",
    "prim_to_cons",
    "pressure",
    "sound_speed",
    "euler_flux_x",
    "rotate_to_normal",
    "rotate_from_normal",
]


class StateInvalid(RuntimeError):
    """Raised when a state with nonpositive density or pressure is produced."""


@dataclass(frozen=True)
class GasModel:
    """Perfect-gas description.

    Attributes:
        gamma: ratio of specific heats; must satisfy 1 < gamma <= 5/3 so the
            internal degree-of-freedom count stays nonnegative in 2-D.
        prandtl: fixed at 1, the natural value of the single-relaxation
            kinetic model used by the gas-kinetic flux.
    """

    gamma: float = 1.4
    prandtl: float = 1.0

    def __post_init__(self):
        if not 1.0 < self.gamma <= 5.0 / 3.0 + 1e-12:
            raise ValueError(f"gamma={self.gamma} outside (1, 5/3]")

    @property
    def K(self) -> float:
        """Internal degrees of freedom of the 2-D kinetic model."""
        return (4.0 - 2.0 * self.gamma) / (self.gamma - 1.0)


@nb.njit(cache=True)
def _prim_s(rho, mx, my, E, gamma):
    """Scalar conserved -> (rho, U, V, p)."""
    U = mx / rho
    V = my / rho
    p = (gamma - 1.0) * (E - 0.5 * rho * (U * U + V * V))
    return rho, U, V, p


@nb.njit(cache=True)
def _cons_s(rho, U, V, p, gamma):
    """Scalar primitive -> (rho, rho U, rho V, rho E)."""
    E = p / (gamma - 1.0) + 0.5 * rho * (U * U + V * V)
    return rho, rho * U, rho * V, E


@nb.njit(cache=True)
def _sound_s(rho, p, gamma):
    return np.sqrt(gamma * p / rho)


@nb.njit(cache=True)
def _euler_flux_s(rho, U, V, p, gamma):
    """Flux of the conserved vector through a face with normal +x."""
    E = p / (gamma - 1.0) + 0.5 * rho * (U * U + V * V)
    return rho * U, rho * U * U + p, rho * U * V, U * (E + p)


def cons_to_prim(w, gas: GasModel, check: bool = True):
    """Convert conserved variables to primitives (rho, U, V, p).

    Args:
        w: array with last axis length 4.
        gas: gas model providing gamma.
        check: when True raise StateInvalid on nonpositive rho or p.

    Returns:
        Array of the same shape holding (rho, U, V, p).
    """
    w = np.asarray(w, dtype=np.float64)
    rho = w[..., 0]
    out = np.empty_like(w)
    out[..., 0] = rho
    out[..., 1] = w[..., 1] / rho
    out[..., 2] = w[..., 2] / rho
    out[..., 3] = (gas.gamma - 1.0) * (
        w[..., 3] - 0.5 * (w[..., 1] ** 2 + w[..., 2] ** 2) / rho
    )
    if check and (np.any(rho <= 0.0) or np.any(out[..., 3] <= 0.0)):
        raise StateInvalid("nonpositive density or pressure in cons_to_prim")
    return out


def prim_to_cons(q, gas: GasModel):
    """Convert primitives (rho, U, V, p) to conserved variables."""
    q = np.asarray(q, dtype=np.float64)
    out = np.empty_like(q)
    rho = q[..., 0]
    out[..., 0] = rho
    out[..., 1] = rho * q[..., 1]
    out[..., 2] = rho * q[..., 2]
    out[..., 3] = q[..., 3] / (gas.gamma - 1.0) + 0.5 * rho * (
        q[..., 1] ** 2 + q[..., 2] ** 2
    )
    return out


def pressure(w, gas: GasModel):
    w = np.asarray(w, dtype=np.float64)
    return (gas.gamma - 1.0) * (
        w[..., 3] - 0.5 * (w[..., 1] ** 2 + w[..., 2] ** 2) / w[..., 0]
    )


def sound_speed(w, gas: GasModel):
    return np.sqrt(gas.gamma * pressure(w, gas) / np.asarray(w)[..., 0])


def euler_flux_x(w, gas: GasModel):
    """Inviscid flux through a face with unit normal +x."""
    q = cons_to_prim(w, gas)
    rho, U, V, p = q[..., 0], q[..., 1], q[..., 2], q[..., 3]
    out = np.empty_like(q)
    out[..., 0] = rho * U
    out[..., 1] = rho * U * U + p
    out[..., 2] = rho * U * V
    out[..., 3] = U * (np.asarray(w)[..., 3] + p)
    return out


# Interface-normal frame.  The solver only ever needs the two grid
# orientations; theta = pi/2 maps (U, V) -> (V, -U) so the y-sweep can
# reuse every x-direction kernel unchanged.

@nb.njit(cache=True)
def _rot_fwd_s(w0, w1, w2, w3):
    """Global -> frame whose x axis is the +y grid direction."""
    return w0, w2, -w1, w3


@nb.njit(cache=True)
def _rot_back_s(w0, w1, w2, w3):
    return w0, -w2, w1, w3


def rotate_to_normal(w, nx: float, ny_: float):
    """Rotate the momentum components into the frame of normal (nx, ny).

    Only the momentum pair transforms; density and energy are scalars.
    """
    w = np.asarray(w, dtype=np.float64)
    out = w.copy()
    out[..., 1] = nx * w[..., 1] + ny_ * w[..., 2]
    out[..., 2] = -ny_ * w[..., 1] + nx * w[..., 2]
    return out


def rotate_from_normal(w, nx: float, ny_: float):
    """Inverse of rotate_to_normal for the same normal."""
    w = np.asarray(w, dtype=np.float64)
    out = w.copy()
    out[..., 1] = nx * w[..., 1] - ny_ * w[..., 2]
    out[..., 2] = ny_ * w[..., 1] + nx * w[..., 2]
    return out
