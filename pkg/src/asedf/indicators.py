"""Smoothness indicators and nonlinear weights for the (5,3) fallback.

For a quadratic with modal coefficients (c1, c2) on the zero-mean basis
the Jiang-Shu indicator collapses to the closed form

    beta = (c1 - c2)^2 + (13/3) c2^2

which is what the sub-stencil evaluation uses.  The five-point stencil
gets the simplified high-order indicator built from the three quadratic
ones rather than a direct quartic integral.
"""
from __future__ import annotations

import numba as nb
import numpy as np

__all__ = [
    "D_HI_DEFAULT",
    "D_LO_DEFAULT",
    "WEIGHT_EPS",
    "beta_quadratic",
    "beta5_simplified",
    "wenoz_weights",
    "linear_weights",
]

D_HI_DEFAULT = 0.85
D_LO_DEFAULT = 0.85
WEIGHT_EPS = 1e-6


@nb.njit(cache=True)
def beta_quadratic(c1, c2):
    d = c1 - c2
    return d * d + (13.0 / 3.0) * c2 * c2


@nb.njit(cache=True)
def beta5_simplified(b_m, b_c, b_p):
    """High-order indicator from the three quadratic sub-indicators."""
    return (b_m + 4.0 * b_c + b_p) / 6.0 + abs(b_m - b_p)


@nb.njit(cache=True)
def wenoz_weights(b5, b_m, b_c, b_p, d_hi, d_lo, eps, out):
    """Normalized nonlinear weights, order: (five-point, r3-, r3c, r3+).

    Writes into out (length 4) and returns nothing; the tau indicator is
    the mean absolute deviation of the sub-indicators from the high-order
    one.
    """
    tz = (abs(b5 - b_m) + abs(b5 - b_c) + abs(b5 - b_p)) / 3.0
    side = (1.0 - d_hi) * (1.0 - d_lo) / 2.0
    out[0] = d_hi * (1.0 + (tz / (b5 + eps)) ** 2)
    out[1] = side * (1.0 + (tz / (b_m + eps)) ** 2)
    out[2] = (1.0 - d_hi) * d_lo * (1.0 + (tz / (b_c + eps)) ** 2)
    out[3] = side * (1.0 + (tz / (b_p + eps)) ** 2)
    tot = out[0] + out[1] + out[2] + out[3]
    out[0] /= tot
    out[1] /= tot
    out[2] /= tot
    out[3] /= tot


def linear_weights(d_hi: float = D_HI_DEFAULT, d_lo: float = D_LO_DEFAULT) -> np.ndarray:
    """Linear weight vector the nonlinear weights relax to on smooth data."""
    side = (1.0 - d_hi) * (1.0 - d_lo) / 2.0
    return np.array([d_hi, side, (1.0 - d_hi) * d_lo, side])
