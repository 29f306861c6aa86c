"""Zero-mean polynomial basis over a single cell.

Reconstruction inside cell j uses local coordinate z = (x - x_{j+1/2}) / dx,
so the cell occupies z in [-1, 0] and z = 0 is its right face.  Basis
member n is

    Z_n(z) = z^n + c_n,   c_n = -(-1)^n / (n + 1),

which has exact zero mean over the cell; the constant term of a modal
expansion therefore stays equal to the cell average regardless of the
higher coefficients.
"""
from __future__ import annotations

from fractions import Fraction

import numba as nb
import numpy as np

__all__ = ["MAX_DEGREE", "ZMEAN_CONST", "ZeroMeanBasis", "eval_value", "eval_deriv"]

MAX_DEGREE = 8

#: c_n for n = 1..MAX_DEGREE
ZMEAN_CONST = np.array([-((-1.0) ** n) / (n + 1) for n in range(1, MAX_DEGREE + 1)])

#: Z_n(-1) = (-1)^n + c_n, used for the left-face evaluation
_EDGE_LEFT = np.array([(-1.0) ** n for n in range(1, MAX_DEGREE + 1)]) + ZMEAN_CONST

#: d/dz of z^n at z = -1: n * (-1)^(n-1)
_DEDGE_LEFT = np.array([n * (-1.0) ** (n - 1) for n in range(1, MAX_DEGREE + 1)])


@nb.njit(cache=True)
def eval_value(w0, coef, nm, z):
    """P(z) for modal coefficients coef[0:nm] on top of cell average w0."""
    v = w0
    zp = 1.0
    for n in range(nm):
        zp *= z
        v += coef[n] * (zp + ZMEAN_CONST[n])
    return v


@nb.njit(cache=True)
def eval_deriv(w0, coef, nm, z, dx):
    """dP/dx at local coordinate z (w0 accepted for symmetry, unused)."""
    d = 0.0
    zp = 1.0
    for n in range(nm):
        d += coef[n] * (n + 1) * zp
        zp *= z
    return d / dx


class ZeroMeanBasis:
    """Exact-rational helper used to derive stencil tables and in tests."""

    @staticmethod
    def const(n: int) -> Fraction:
        return -Fraction((-1) ** n, n + 1)

    @staticmethod
    def value(n: int, z: Fraction) -> Fraction:
        return z ** n + ZeroMeanBasis.const(n)

    @staticmethod
    def cell_average(n: int, k: int) -> Fraction:
        """Average of Z_n over cell k (cell 0 is the home cell, k in Z).

        Cell k spans z in [k-1, k]; the mean of z^n there is
        (k^{n+1} - (k-1)^{n+1}) / (n+1).
        """
        return Fraction(k ** (n + 1) - (k - 1) ** (n + 1), n + 1) + ZeroMeanBasis.const(n)
