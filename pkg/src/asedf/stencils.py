"""Stencil tables: cell-average windows -> modal coefficients.

Each stencil S maps the cell averages it covers to the modal coefficients
of the zero-mean expansion on the home cell.  The tables are derived once
at import time by solving the cell-average moment system in exact rational
arithmetic, then frozen to floats; this avoids transcription slips in the
longer 7- and 9-point tables and keeps a single source of truth (the
basis definition).

Offsets are relative to the home cell; e.g. the three-point stencils are
(-2..0), (-1..1), (0..2) and the wide stencils are symmetric.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from .basis import ZeroMeanBasis

__all__ = [
    "STENCIL_OFFSETS",
    "COEF_R3",
    "COEF_R5",
    "COEF_R7",
    "COEF_R9",
    "modal_coefficients",
]


def _derive(offsets: list[int]) -> np.ndarray:
    """Solve sum_m coef_m * avg(Z_m, k) = W_k - W_0 for the modal map.

    Returns array (n-1, n) with row m-1 holding the weights of the cell
    averages (ordered as offsets) for modal coefficient m.
    """
    ks = [k for k in offsets if k != 0]
    n = len(offsets)
    A = [[ZeroMeanBasis.cell_average(m, k) for m in range(1, n)] for k in ks]
    # invert by Gauss-Jordan in Fractions
    size = n - 1
    M = [row[:] + [Fraction(int(i == j)) for j in range(size)]
         for i, row in enumerate(A)]
    for col in range(size):
        piv = next(r for r in range(col, size) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        inv_p = M[col][col]
        M[col] = [x / inv_p for x in M[col]]
        for r in range(size):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    inv = [row[size:] for row in M]
    out = np.zeros((size, n))
    zero_pos = offsets.index(0)
    for m in range(size):
        for j, k in enumerate(ks):
            pos = offsets.index(k)
            out[m, pos] = float(inv[m][j])
            out[m, zero_pos] -= float(inv[m][j])
    return out


STENCIL_OFFSETS = {
    "r3m": [-2, -1, 0],
    "r3c": [-1, 0, 1],
    "r3p": [0, 1, 2],
    "r5": [-2, -1, 0, 1, 2],
    "r7": [-3, -2, -1, 0, 1, 2, 3],
    "r9": [-4, -3, -2, -1, 0, 1, 2, 3, 4],
}

#: three-point sub-stencil tables stacked as (variant, 2, 3); variant
#: order is biased-left, centered, biased-right
COEF_R3 = np.stack([
    _derive(STENCIL_OFFSETS["r3m"]),
    _derive(STENCIL_OFFSETS["r3c"]),
    _derive(STENCIL_OFFSETS["r3p"]),
])

COEF_R5 = _derive(STENCIL_OFFSETS["r5"])
COEF_R7 = _derive(STENCIL_OFFSETS["r7"])
COEF_R9 = _derive(STENCIL_OFFSETS["r9"])


def modal_coefficients(window: np.ndarray, stencil: str) -> np.ndarray:
    """Modal coefficients of one stencil applied to a cell-average window.

    Args:
        window: cell averages covering the stencil offsets, in order.
        stencil: one of r3m, r3c, r3p, r5, r7, r9.

    Returns:
        Modal coefficient vector (length = window size - 1).
    """
    offs = STENCIL_OFFSETS[stencil]
    window = np.asarray(window, dtype=np.float64)
    if window.shape[-1] != len(offs):
        raise ValueError(f"window length {window.shape[-1]} != {len(offs)}")
    if stencil.startswith("r3"):
        tab = COEF_R3[("r3m", "r3c", "r3p").index(stencil)]
    else:
        tab = {"r5": COEF_R5, "r7": COEF_R7, "r9": COEF_R9}[stencil]
    return window @ tab.T
